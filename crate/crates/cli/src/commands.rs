use std::collections::BTreeMap;
use std::fmt::Display;

use sha2::{Digest, Sha256};

use virbialg_core::cohomology::standard_window;
use virbialg_core::{
    antisym_defect, centralizer_witness, check_cocommutator_axioms, classify, cybe_residual,
    inner_witness_homogeneous, inner_witness_window, mybe_defect, reduce_to_antisymmetric,
    theorem_identity_defect, Cobracket, Config, Error, Reduction, Tensor, Verdict,
};

use crate::certificate::{Certificate, FAIL, OK};
use crate::error::ScriptError;
use crate::parser::{parse, Command, Script, RESERVED};
use crate::value::{eval, Env, Value, FUNCTIONS};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub core: Config,
    /// Also list vanishing defects and every checked pair.
    pub verbose: bool,
}

/// Command name and its accepted arguments; a leading `?` marks optional.
const COMMANDS: &[(&str, &[&str])] = &[
    ("cybe", &["r"]),
    ("mybe", &["r", "x"]),
    ("bridge", &["r", "x"]),
    ("cobracket", &["?r", "?delta", "x"]),
    ("michaelis", &["d", "alpha"]),
    ("axioms", &["?r", "?delta", "?window"]),
    ("innerize", &["delta", "alpha"]),
    ("innerize0", &["delta"]),
    ("witness", &["c"]),
    ("reduce", &["r"]),
    ("classify", &["delta"]),
];

pub fn command_names() -> impl Iterator<Item = &'static str> {
    COMMANDS.iter().map(|(n, _)| *n)
}

struct Args {
    command: String,
    values: BTreeMap<String, Value>,
}

impl Args {
    fn err(&self, arg: &str, msg: impl Into<String>) -> ScriptError {
        ScriptError::type_error(format!("{}.{arg}", self.command), msg)
    }

    fn get<T>(&self, arg: &str, f: impl Fn(&Value) -> Result<T, String>) -> Result<T, ScriptError> {
        let v = self
            .values
            .get(arg)
            .ok_or_else(|| self.err(arg, "missing argument"))?;
        f(v).map_err(|m| self.err(arg, m))
    }

    fn opt<T>(
        &self,
        arg: &str,
        f: impl Fn(&Value) -> Result<T, String>,
    ) -> Result<Option<T>, ScriptError> {
        match self.values.get(arg) {
            Some(_) => self.get(arg, f).map(Some),
            None => Ok(None),
        }
    }

    fn cobracket(&self) -> Result<Cobracket, ScriptError> {
        match (
            self.opt("r", Value::as_t2)?,
            self.opt("delta", Value::as_table)?,
        ) {
            (Some(r), None) => Ok(Cobracket::FromR(r)),
            (None, Some(t)) => Ok(Cobracket::Tabulated(t)),
            _ => Err(self.err("r", "give exactly one of 'r' or 'delta'")),
        }
    }
}

/// Evaluates the bindings in order; each must type-check before the next.
pub fn evaluate(script: &Script) -> Result<Env, ScriptError> {
    let mut env = Env::new();
    for b in &script.bindings {
        if RESERVED.contains(&b.name.as_str()) || FUNCTIONS.contains(&b.name.as_str()) {
            return Err(ScriptError::type_error(&b.name, "name is reserved"));
        }
        if env.contains_key(&b.name) {
            return Err(ScriptError::type_error(&b.name, "name is already bound"));
        }
        let v = eval(&b.expr, &env).map_err(|m| ScriptError::type_error(&b.name, m))?;
        env.insert(b.name.clone(), v);
    }
    Ok(env)
}

fn bind_args(cmd: &Command, env: &Env) -> Result<Args, ScriptError> {
    let spec = COMMANDS
        .iter()
        .find(|(n, _)| *n == cmd.name)
        .map(|(_, a)| *a)
        .ok_or_else(|| {
            ScriptError::syntax(
                cmd.pos.line,
                cmd.pos.col,
                format!("unknown command '{}'", cmd.name),
            )
        })?;
    let mut args = Args {
        command: cmd.name.clone(),
        values: BTreeMap::new(),
    };
    for (name, expr) in &cmd.args {
        if !spec.iter().any(|a| a.trim_start_matches('?') == name) {
            return Err(args.err(name, "unknown argument"));
        }
        if args.values.contains_key(name) {
            return Err(args.err(name, "argument given twice"));
        }
        let v = eval(expr, env).map_err(|m| args.err(name, m))?;
        args.values.insert(name.clone(), v);
    }
    for a in spec.iter().filter(|a| !a.starts_with('?')) {
        if !args.values.contains_key(*a) {
            return Err(args.err(a, "missing argument"));
        }
    }
    Ok(args)
}

pub fn input_hash(src: &str) -> String {
    let digest = Sha256::digest(src.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses, type-checks and runs a script.
pub fn run_source(src: &str, config: &RunConfig) -> Result<Certificate, ScriptError> {
    let script = parse(src)?;
    run(&script, src, config)
}

pub fn run(script: &Script, src: &str, config: &RunConfig) -> Result<Certificate, ScriptError> {
    let env = evaluate(script)?;
    let args = bind_args(&script.command, &env)?;
    let mut cert = Certificate::default();
    cert.input
        .push(("command".into(), script.command.text.clone()));
    cert.input.push(("sha256".into(), input_hash(src)));
    cert.input
        .push(("radius".into(), config.core.radius.to_string()));
    cert.input
        .push(("budget".into(), config.core.budget.to_string()));
    for (k, v) in &args.values {
        cert.input.push((format!("arg {k}"), v.to_string()));
    }
    match dispatch(&args, config, &mut cert) {
        Ok(()) => {}
        Err(Failure::Script(e)) => return Err(e),
        Err(Failure::Op(e)) => cert.set_verdict(format!("ERROR({e})")),
    }
    Ok(cert)
}

fn zero_verdict(cert: &mut Certificate, zero: bool) {
    cert.set_verdict(if zero { OK } else { FAIL });
}

fn joined<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn centralizer<const N: usize>(
    c: &Tensor<N>,
    config: &Config,
    cert: &mut Certificate,
) -> Result<(), Failure> {
    let w = centralizer_witness(c, config)?;
    cert.witness("x", &w.probe);
    cert.witness("x.c", &w.image);
    for p in &w.tried {
        cert.probe("tried", format!("{p} -> 0"));
    }
    cert.probe("accepted", format!("{} -> nonzero", w.probe));
    cert.set_verdict(OK);
    Ok(())
}

/// Type errors abort the run; operation errors end up in the certificate.
enum Failure {
    Script(ScriptError),
    Op(Error),
}

impl From<ScriptError> for Failure {
    fn from(e: ScriptError) -> Self {
        Failure::Script(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Op(e)
    }
}

fn dispatch(args: &Args, config: &RunConfig, cert: &mut Certificate) -> Result<(), Failure> {
    let cfg = &config.core;
    match args.command.as_str() {
        "cybe" => {
            let r = args.get("r", Value::as_t2)?;
            let c = cybe_residual(&r);
            cert.defect("c(r)", &c);
            zero_verdict(cert, c.is_zero());
        }
        "mybe" => {
            let r = args.get("r", Value::as_t2)?;
            let x = args.get("x", Value::as_elt)?;
            let d = mybe_defect(&r, &x);
            cert.defect("x.c(r)", &d);
            zero_verdict(cert, d.is_zero());
        }
        "bridge" => {
            let r = args.get("r", Value::as_t2)?;
            let x = args.get("x", Value::as_elt)?;
            let d = theorem_identity_defect(&r, &x)?;
            cert.witness("x.c(r)", mybe_defect(&r, &x));
            cert.defect("lhs-rhs", &d);
            zero_verdict(cert, d.is_zero());
        }
        "cobracket" => {
            let delta = args.cobracket()?;
            let x = args.get("x", Value::as_elt)?;
            let v = delta.apply(&x)?;
            cert.witness("delta(x)", &v);
            cert.set_verdict(OK);
        }
        "michaelis" => {
            let d = args.get("d", Value::as_cartan)?;
            let alpha = args.get("alpha", Value::as_degree)?;
            let r = virbialg_core::michaelis_r(&d, &alpha)?;
            let c = cybe_residual(&r);
            let a = antisym_defect(&r);
            cert.witness("r", &r);
            cert.defect("c(r)", &c);
            cert.defect("r+tau(r)", &a);
            zero_verdict(cert, c.is_zero() && a.is_zero());
        }
        "axioms" => {
            let delta = args.cobracket()?;
            let window = match args.opt("window", Value::as_window)? {
                Some(w) => w,
                None => match &delta {
                    Cobracket::Tabulated(t) => t.window().to_vec(),
                    Cobracket::FromR(_) => standard_window(),
                },
            };
            let rep = check_cocommutator_axioms(&delta, &window)?;
            let show = |zero: bool| config.verbose || !zero;
            for (s, t) in &rep.antisymmetry {
                if show(t.is_zero()) {
                    cert.defect(format!("antisymmetry {s}"), t);
                }
            }
            for (s, t) in &rep.co_jacobi {
                match t {
                    Some(t) if show(t.is_zero()) => cert.defect(format!("co-jacobi {s}"), t),
                    None => cert.probe(format!("co-jacobi {s}"), "outside window"),
                    _ => {}
                }
            }
            for ((x, y), t) in &rep.compatibility {
                match t {
                    Some(t) if show(t.is_zero()) => {
                        cert.defect(format!("compatibility ({x}, {y})"), t)
                    }
                    None => cert.probe(format!("compatibility ({x}, {y})"), "outside window"),
                    _ => {}
                }
            }
            cert.witness("window", joined(&window));
            cert.witness(
                "checked",
                rep.antisymmetry.len() + rep.co_jacobi.len() + rep.compatibility.len()
                    - rep.skipped(),
            );
            cert.witness("skipped", rep.skipped());
            zero_verdict(cert, rep.all_zero());
        }
        "innerize" => {
            let d = args.get("delta", Value::as_table)?;
            let alpha = args.get("alpha", Value::as_degree)?;
            let w = inner_witness_homogeneous(&d, &alpha)?;
            cert.witness("a", &w.witness);
            cert.witness("cartan", &w.cartan);
            cert.probe("verified", joined(&w.verified));
            cert.set_verdict(OK);
        }
        "innerize0" => {
            let d = args.get("delta", Value::as_table)?;
            match inner_witness_window(&d, cfg) {
                Ok(w) => {
                    cert.witness("u", &w.witness);
                    cert.probe("unknowns", w.unknowns);
                    cert.probe("equations", w.equations);
                    cert.probe("rank", w.rank);
                    cert.set_verdict(OK);
                }
                Err(Error::NoSolution(diag)) => {
                    cert.defect("no solution", &diag);
                    cert.probe("unknowns", diag.unknowns);
                    cert.probe("equations", diag.equations);
                    cert.probe("rank", diag.rank);
                    cert.probe("augmented rank", diag.augmented_rank);
                    cert.set_verdict(FAIL);
                }
                Err(e) => return Err(e.into()),
            }
        }
        "witness" => {
            let c = args.values.get("c").expect("required argument");
            match c {
                Value::T3(t) => centralizer(t, cfg, cert)?,
                Value::Elt(x) => centralizer(&x.map_keys(|s| [s.clone()]), cfg, cert)?,
                _ => centralizer(&args.get("c", Value::as_t2)?, cfg, cert)?,
            }
        }
        "reduce" => {
            let r = args.get("r", Value::as_t2)?;
            let red = reduce_to_antisymmetric(&r, cfg)?;
            for line in red.log() {
                cert.probe("log", line);
            }
            match red {
                Reduction::Antisymmetric {
                    witness, residual, ..
                } => {
                    cert.witness("w", &witness);
                    cert.defect("r-(1-tau)w", &residual);
                    zero_verdict(cert, residual.is_zero());
                }
                Reduction::Counterexample { probe, defect, .. } => {
                    cert.witness("probe", &probe);
                    cert.defect("a.r+tau(a.r)", &defect);
                    cert.set_verdict(format!("NotAntisymmetric({probe})"));
                }
            }
        }
        "classify" => {
            let d = args.get("delta", Value::as_table)?;
            let res = classify(&d, cfg);
            if let Some(r) = &res.r {
                cert.witness("r", r);
            }
            for (deg, w) in &res.components {
                cert.witness(format!("r{deg}"), w);
            }
            if let Some(Reduction::Antisymmetric { witness, .. }) = &res.reduction {
                cert.witness("w", witness);
            }
            for ((x, y), t) in &res.derivation_defects {
                if config.verbose || !t.is_zero() {
                    cert.defect(format!("derivation ({x}, {y})"), t);
                }
            }
            if let Some(Reduction::Counterexample { defect, .. }) = &res.reduction {
                cert.defect("a.r+tau(a.r)", defect);
            }
            if let Some(c) = &res.cybe {
                cert.defect("c(r)", c);
            }
            for (x, y) in &res.skipped_pairs {
                cert.probe(format!("derivation ({x}, {y})"), "outside window");
            }
            for line in &res.log {
                cert.probe("log", line);
            }
            if let Some(red) = &res.reduction {
                for line in red.log() {
                    cert.probe("log", line);
                }
            }
            let verdict = match &res.verdict {
                Verdict::CybeFails(_) => "CYBEFails".to_string(),
                v => v.to_string(),
            };
            cert.set_verdict(verdict);
        }
        other => unreachable!("command {other} passed bind_args"),
    }
    Ok(())
}
