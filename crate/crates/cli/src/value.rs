use std::collections::BTreeMap;
use std::fmt;

use virbialg_core::cohomology::standard_window;
use virbialg_core::tensor::{alt, cyclic, tensor2, tensor_left, tensor_right};
use virbialg_core::{
    act, bracket, michaelis_r, twist, BasisSym, CartanElt, Degree, DerivationSpec, LieElt, Scalar,
    Tensor2, Tensor3,
};

use crate::parser::Expr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Degree(Degree),
    Elt(LieElt),
    T2(Tensor2),
    T3(Tensor3),
    Table(DerivationSpec),
    List(Vec<Value>),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "Scalar",
            Value::Degree(_) => "Degree",
            Value::Elt(_) => "Elt",
            Value::T2(_) => "T2",
            Value::T3(_) => "T3",
            Value::Table(_) => "Table",
            Value::List(_) => "List",
        }
    }

    fn is_zero_scalar(&self) -> bool {
        matches!(self, Value::Scalar(s) if s.is_zero())
    }

    pub fn as_scalar(&self) -> Result<Scalar, String> {
        match self {
            Value::Scalar(s) => Ok(s.clone()),
            other => Err(format!("expected Scalar, found {}", other.type_name())),
        }
    }

    pub fn as_degree(&self) -> Result<Degree, String> {
        match self {
            Value::Degree(d) => Ok(d.clone()),
            other => Err(format!("expected Degree, found {}", other.type_name())),
        }
    }

    /// Elements; the scalar `0` is accepted as the zero element.
    pub fn as_elt(&self) -> Result<LieElt, String> {
        match self {
            Value::Elt(x) => Ok(x.clone()),
            v if v.is_zero_scalar() => Ok(LieElt::zero()),
            other => Err(format!("expected Elt, found {}", other.type_name())),
        }
    }

    pub fn as_t2(&self) -> Result<Tensor2, String> {
        match self {
            Value::T2(t) => Ok(t.clone()),
            v if v.is_zero_scalar() => Ok(Tensor2::zero()),
            Value::Elt(x) if x.is_zero() => Ok(Tensor2::zero()),
            other => Err(format!("expected T2, found {}", other.type_name())),
        }
    }

    pub fn as_t3(&self) -> Result<Tensor3, String> {
        match self {
            Value::T3(t) => Ok(t.clone()),
            v if v.is_zero_scalar() => Ok(Tensor3::zero()),
            Value::Elt(x) if x.is_zero() => Ok(Tensor3::zero()),
            other => Err(format!("expected T3, found {}", other.type_name())),
        }
    }

    pub fn as_table(&self) -> Result<DerivationSpec, String> {
        match self {
            Value::Table(t) => Ok(t.clone()),
            other => Err(format!("expected Table, found {}", other.type_name())),
        }
    }

    pub fn as_cartan(&self) -> Result<CartanElt, String> {
        let x = self.as_elt()?;
        CartanElt::from_elt(&x).ok_or_else(|| format!("{x} is not in span{{d1, d2}}"))
    }

    /// A single basis symbol with coefficient 1.
    pub fn as_basis(&self) -> Result<BasisSym, String> {
        let x = self.as_elt()?;
        let mut it = x.iter();
        match (it.next(), it.next()) {
            (Some((s, c)), None) if c.is_one() => Ok(s.clone()),
            _ => Err(format!("{x} is not a single basis symbol")),
        }
    }

    pub fn as_window(&self) -> Result<Vec<BasisSym>, String> {
        match self {
            Value::List(items) => items.iter().map(Value::as_basis).collect(),
            other => Err(format!("expected List, found {}", other.type_name())),
        }
    }
}

/// Printed in the expression grammar, so printed values parse back.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Degree(d) => write!(f, "{d}"),
            Value::Elt(x) => write!(f, "{x}"),
            Value::T2(t) => write!(f, "{t}"),
            Value::T3(t) => write!(f, "{t}"),
            Value::Table(t) => write!(f, "{t}"),
            Value::List(items) => {
                f.write_str("[")?;
                for (k, v) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

pub type Env = BTreeMap<String, Value>;

pub const FUNCTIONS: &[&str] = &[
    "window",
    "tabulate",
    "alt",
    "twist",
    "cyclic",
    "bracket",
    "act",
    "michaelis",
];

fn add(a: Value, b: Value) -> Result<Value, String> {
    use Value::*;
    Ok(match (a, b) {
        (a, b) if b.is_zero_scalar() && a.type_name() != "Degree" => a,
        (a, b) if a.is_zero_scalar() && b.type_name() != "Degree" => b,
        (Scalar(x), Scalar(y)) => Scalar(&x + &y),
        (Degree(x), Degree(y)) => Degree(&x + &y),
        (Elt(x), Elt(y)) => Elt(&x + &y),
        (T2(x), T2(y)) => T2(&x + &y),
        (T3(x), T3(y)) => T3(&x + &y),
        (Elt(x), T2(y)) | (T2(y), Elt(x)) if x.is_zero() => T2(y),
        (Elt(x), T3(y)) | (T3(y), Elt(x)) if x.is_zero() => T3(y),
        (a, b) => {
            return Err(format!(
                "cannot add {} and {}",
                a.type_name(),
                b.type_name()
            ))
        }
    })
}

fn scale(s: &Scalar, v: Value) -> Result<Value, String> {
    use Value::*;
    Ok(match v {
        Scalar(x) => Scalar(s * &x),
        Degree(d) => Degree(d.scale(s)),
        Elt(x) => Elt(x.scale(s)),
        T2(t) => T2(t.scale(s)),
        T3(t) => T3(t.scale(s)),
        other => return Err(format!("cannot scale {}", other.type_name())),
    })
}

fn neg(v: Value) -> Result<Value, String> {
    scale(&-Scalar::one(), v)
}

fn mul(a: Value, b: Value) -> Result<Value, String> {
    match (a, b) {
        (Value::Scalar(s), v) | (v, Value::Scalar(s)) => scale(&s, v),
        (a, b) => Err(format!(
            "cannot multiply {} by {}; use '(x)' for tensor products",
            a.type_name(),
            b.type_name()
        )),
    }
}

fn otimes(a: Value, b: Value) -> Result<Value, String> {
    use Value::*;
    Ok(match (a, b) {
        (Elt(x), Elt(y)) => T2(tensor2(&x, &y)),
        (Elt(x), T2(t)) => T3(tensor_left(&x, &t)),
        (T2(t), Elt(y)) => T3(tensor_right(&t, &y)),
        (a, b) => {
            return Err(format!(
                "cannot form {} (x) {}",
                a.type_name(),
                b.type_name()
            ))
        }
    })
}

fn integer(v: &Value) -> Result<i64, String> {
    let s = v.as_scalar()?;
    if s.is_real() && s.re().is_integer() {
        if let Ok(n) = i64::try_from(s.re().to_integer()) {
            return Ok(n);
        }
    }
    Err(format!("expected a small integer, found {s}"))
}

/// `d1, d2` and every `L(p;q)` with `|p|, |q| ≤ n`, `(p,q) ≠ 0`.
pub fn box_window(n: i64) -> Vec<BasisSym> {
    let mut w = vec![BasisSym::D1, BasisSym::D2];
    for p in -n..=n {
        for q in -n..=n {
            if (p, q) != (0, 0) {
                w.push(BasisSym::L(Degree::int(p, q)));
            }
        }
    }
    w
}

fn window_value(w: Vec<BasisSym>) -> Value {
    Value::List(
        w.into_iter()
            .map(|s| Value::Elt(LieElt::from_key(s)))
            .collect(),
    )
}

fn arity(name: &str, args: &[Value], n: usize) -> Result<(), String> {
    if args.len() == n {
        Ok(())
    } else {
        Err(format!("{name} takes {n} argument(s), got {}", args.len()))
    }
}

fn call(name: &str, args: Vec<Value>) -> Result<Value, String> {
    match name {
        "window" => match args.len() {
            0 => Ok(window_value(standard_window())),
            1 => {
                let n = integer(&args[0])?;
                if !(1..=20).contains(&n) {
                    return Err(format!("window radius must be in 1..=20, got {n}"));
                }
                Ok(window_value(box_window(n)))
            }
            k => Err(format!("window takes 0 or 1 arguments, got {k}")),
        },
        "tabulate" => {
            let (r, w) = match args.len() {
                1 => (args[0].as_t2()?, standard_window()),
                2 => (args[0].as_t2()?, args[1].as_window()?),
                k => return Err(format!("tabulate takes 1 or 2 arguments, got {k}")),
            };
            Ok(Value::Table(DerivationSpec::inner(&r, &w)))
        }
        "alt" => {
            arity(name, &args, 1)?;
            Ok(Value::T2(alt(&args[0].as_t2()?)))
        }
        "twist" => {
            arity(name, &args, 1)?;
            Ok(Value::T2(twist(&args[0].as_t2()?)))
        }
        "cyclic" => {
            arity(name, &args, 1)?;
            Ok(Value::T3(cyclic(&args[0].as_t3()?)))
        }
        "bracket" => {
            arity(name, &args, 2)?;
            Ok(Value::Elt(bracket(&args[0].as_elt()?, &args[1].as_elt()?)))
        }
        "act" => {
            arity(name, &args, 2)?;
            let x = args[0].as_elt()?;
            match &args[1] {
                Value::Elt(y) => Ok(Value::Elt(bracket(&x, y))),
                Value::T2(t) => Ok(Value::T2(act(&x, t))),
                Value::T3(t) => Ok(Value::T3(act(&x, t))),
                other => Err(format!("cannot act on {}", other.type_name())),
            }
        }
        "michaelis" => {
            arity(name, &args, 2)?;
            let d = args[0].as_cartan()?;
            let alpha = args[1].as_degree()?;
            michaelis_r(&d, &alpha)
                .map(Value::T2)
                .map_err(|e| e.to_string())
        }
        _ => Err(format!("unknown function '{name}'")),
    }
}

pub fn eval(expr: &Expr, env: &Env) -> Result<Value, String> {
    Ok(match expr {
        Expr::Num(n) => Value::Scalar(n.clone()),
        Expr::Name(n) => env
            .get(n)
            .cloned()
            .ok_or_else(|| format!("unknown name '{n}'"))?,
        Expr::Cartan(i) => Value::Elt(LieElt::from_key(BasisSym::d(*i))),
        Expr::L(a, b) => {
            let deg = match b {
                Some(b) => Degree::new(eval(a, env)?.as_scalar()?, eval(b, env)?.as_scalar()?),
                None => eval(a, env)?.as_degree()?,
            };
            Value::Elt(LieElt::l(deg))
        }
        Expr::Degree(a, b) => Value::Degree(Degree::new(
            eval(a, env)?.as_scalar()?,
            eval(b, env)?.as_scalar()?,
        )),
        Expr::Neg(a) => neg(eval(a, env)?)?,
        Expr::Add(a, b) => add(eval(a, env)?, eval(b, env)?)?,
        Expr::Sub(a, b) => add(eval(a, env)?, neg(eval(b, env)?)?)?,
        Expr::Mul(a, b) => mul(eval(a, env)?, eval(b, env)?)?,
        Expr::Otimes(a, b) => otimes(eval(a, env)?, eval(b, env)?)?,
        Expr::Call(name, args) => {
            let args = args
                .iter()
                .map(|a| eval(a, env))
                .collect::<Result<Vec<_>, _>>()?;
            call(name, args)?
        }
        Expr::List(items) => Value::List(
            items
                .iter()
                .map(|a| eval(a, env))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Expr::Table(entries) => {
            let mut window = Vec::new();
            let mut values = BTreeMap::new();
            for (k, v) in entries {
                let key = eval(k, env)?.as_basis()?;
                if values.contains_key(&key) {
                    return Err(format!("duplicate table key {key}"));
                }
                window.push(key.clone());
                values.insert(key, eval(v, env)?.as_t2()?);
            }
            Value::Table(DerivationSpec::new(window, values))
        }
    })
}
