use virbialg_core::Scalar;

use crate::error::ScriptError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// Unsigned literal `n`, `n/m`, `ni`, `n/mi`.
    Num(Scalar),
    /// The tensor sign `(x)`.
    Otimes,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Semi,
    Comma,
    Colon,
    Eq,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Num(n) => format!("number {n}"),
            Tok::Otimes => "'(x)'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::Semi => "';'".into(),
            Tok::Comma => "','".into(),
            Tok::Colon => "':'".into(),
            Tok::Eq => "'='".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// 1-based line and column of a token's first character, plus its byte
/// offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ScriptError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;

    while i < chars.len() {
        let (offset, c) = chars[i];
        let pos = Pos { line, col, offset };
        let mut advance = |n: usize, i: &mut usize| {
            for _ in 0..n {
                if chars[*i].1 == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
                *i += 1;
            }
        };

        if c.is_whitespace() {
            advance(1, &mut i);
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i].1 != '\n' {
                advance(1, &mut i);
            }
            continue;
        }
        if c == '(' && matches!(chars.get(i + 1..i + 3), Some([(_, 'x'), (_, ')')])) {
            out.push(Token {
                tok: Tok::Otimes,
                pos,
            });
            advance(3, &mut i);
            continue;
        }
        if c.is_ascii_digit() {
            let mut j = i;
            let digits = |j: &mut usize| {
                let start = *j;
                while *j < chars.len() && chars[*j].1.is_ascii_digit() {
                    *j += 1;
                }
                chars[start..*j].iter().map(|&(_, c)| c).collect::<String>()
            };
            let num = digits(&mut j);
            let mut den = String::from("1");
            if j < chars.len() && chars[j].1 == '/' {
                j += 1;
                den = digits(&mut j);
                if den.is_empty() {
                    return Err(ScriptError::syntax(
                        pos.line,
                        pos.col + (j - i),
                        "expected denominator after '/'",
                    ));
                }
            }
            let imaginary = j < chars.len() && chars[j].1 == 'i';
            if imaginary {
                j += 1;
            }
            if j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_') {
                return Err(ScriptError::syntax(
                    pos.line,
                    pos.col + (j - i),
                    format!("unexpected '{}' after number", chars[j].1),
                ));
            }
            let value = parse_ratio(&num, &den)
                .ok_or_else(|| ScriptError::syntax(pos.line, pos.col, "zero denominator"))?;
            let value = if imaginary {
                &value * &Scalar::i()
            } else {
                value
            };
            out.push(Token {
                tok: Tok::Num(value),
                pos,
            });
            advance(j - i, &mut i);
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_') {
                j += 1;
            }
            let word: String = chars[i..j].iter().map(|&(_, c)| c).collect();
            out.push(Token {
                tok: Tok::Ident(word),
                pos,
            });
            advance(j - i, &mut i);
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '=' => Tok::Eq,
            other => {
                return Err(ScriptError::syntax(
                    line,
                    col,
                    format!("unexpected character '{other}'"),
                ))
            }
        };
        out.push(Token { tok, pos });
        advance(1, &mut i);
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos {
            line,
            col,
            offset: src.len(),
        },
    });
    Ok(out)
}

fn parse_ratio(num: &str, den: &str) -> Option<Scalar> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(Scalar::real(BigRational::new(n, d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn numbers_and_tensor_sign() {
        assert_eq!(
            toks("1/2*d1 (x) L(1;0)"),
            vec![
                Tok::Num(Scalar::ratio(1, 2)),
                Tok::Star,
                Tok::Ident("d1".into()),
                Tok::Otimes,
                Tok::Ident("L".into()),
                Tok::LParen,
                Tok::Num(Scalar::one()),
                Tok::Semi,
                Tok::Num(Scalar::zero()),
                Tok::RParen,
                Tok::Eof,
            ]
        );
        assert_eq!(
            toks("3/4i")[0],
            Tok::Num(Scalar::gaussian(0, 1) * Scalar::ratio(3, 4))
        );
    }

    #[test]
    fn comments_and_positions() {
        let t = tokenize("# note\n  x = 1;").unwrap();
        assert_eq!(t[0].tok, Tok::Ident("x".into()));
        assert_eq!((t[0].pos.line, t[0].pos.col), (2, 3));
    }

    #[test]
    fn bad_input() {
        assert!(tokenize("1/0").is_err());
        assert!(tokenize("2x").is_err());
        let e = tokenize("x = $").unwrap_err();
        assert_eq!(e, ScriptError::syntax(1, 5, "unexpected character '$'"));
    }
}
