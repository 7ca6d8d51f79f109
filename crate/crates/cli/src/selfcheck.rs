//! Seeded invariant suite behind `virbialg selfcheck`.

use virbialg_core::cohomology::standard_window;
use virbialg_core::random::{self, TestRng};
use virbialg_core::tensor::alt;
use virbialg_core::{
    centralizer_witness, check_cocommutator_axioms, check_jacobi, cybe_residual,
    inner_witness_homogeneous, inner_witness_window, michaelis_r, reduce_to_antisymmetric,
    theorem_identity_defect, Cobracket, Config, DerivationSpec, LieElt, Reduction, Tensor2,
};

use crate::value::Value;

pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

type Check = fn(&mut TestRng, &Config, usize) -> Result<(), String>;

fn jacobi(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    for _ in 0..n {
        let [x, y, z] = std::array::from_fn(|_| random::element(rng, 4, cfg.radius));
        let d = check_jacobi(&x, &y, &z);
        if !d.is_zero() {
            return Err(format!("x = {x}, y = {y}, z = {z}: {d}"));
        }
    }
    Ok(())
}

fn michaelis_axioms(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    let w = standard_window();
    for _ in 0..n {
        let (d, a) = random::michaelis_params(rng, cfg.radius);
        let r = michaelis_r(&d, &a).map_err(|e| e.to_string())?;
        let rep = check_cocommutator_axioms(&Cobracket::FromR(r.clone()), &w)
            .map_err(|e| e.to_string())?;
        if !cybe_residual(&r).is_zero() || !rep.all_zero() {
            return Err(format!("r = {r}"));
        }
    }
    Ok(())
}

fn bridge(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    for _ in 0..n {
        let r = random::antisymmetric(rng, 3, cfg.radius);
        let x = random::element(rng, 3, cfg.radius);
        let d = theorem_identity_defect(&r, &x).map_err(|e| e.to_string())?;
        if !d.is_zero() {
            return Err(format!("r = {r}, x = {x}: {d}"));
        }
    }
    Ok(())
}

fn centralizer(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    let mut done = 0;
    while done < n {
        let r = random::antisymmetric(rng, 3, cfg.radius);
        let c = cybe_residual(&r);
        if c.is_zero() {
            continue;
        }
        let w = centralizer_witness(&c, cfg).map_err(|e| format!("r = {r}: {e}"))?;
        if virbialg_core::act3(&w.probe, &c).is_zero() {
            return Err(format!("probe {} annihilates c({r})", w.probe));
        }
        done += 1;
    }
    Ok(())
}

fn round_trips(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    let w = standard_window();
    for _ in 0..n {
        let alpha = random::nonzero_degree(rng, cfg.radius);
        let hom = random::homogeneous(rng, &alpha, 3, cfg.radius);
        let got = inner_witness_homogeneous(&DerivationSpec::inner(&hom, &w), &alpha)
            .map_err(|e| format!("u = {hom}: {e}"))?;
        if got.witness != hom {
            return Err(format!("u = {hom}, recovered {}", got.witness));
        }
        let u0 = random::v0(rng, 3, cfg.radius);
        let table = DerivationSpec::inner(&u0, &w);
        let got = inner_witness_window(&table, cfg).map_err(|e| format!("u = {u0}: {e}"))?;
        if DerivationSpec::inner(&got.witness, &w) != table {
            return Err(format!("u = {u0}, recovered {}", got.witness));
        }
    }
    Ok(())
}

fn reduction(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    for _ in 0..n {
        let s: Tensor2 = random::tensor(rng, 4, cfg.radius);
        let r = alt(&s);
        match reduce_to_antisymmetric(&r, cfg).map_err(|e| e.to_string())? {
            Reduction::Antisymmetric { witness, .. } if alt(&witness) == r => {}
            other => return Err(format!("r = {r}: {other:?}")),
        }
    }
    Ok(())
}

fn print_parse(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    for _ in 0..n {
        let x: LieElt = random::element(rng, 4, cfg.radius);
        let t: Tensor2 = random::tensor(rng, 4, cfg.radius);
        for v in [Value::Elt(x), Value::T2(t)] {
            let back = crate::eval_str(&v.to_string()).map_err(|e| e.to_string())?;
            let same = match (&v, &back) {
                (Value::Elt(a), b) => b.as_elt().ok().as_ref() == Some(a),
                (Value::T2(a), b) => b.as_t2().ok().as_ref() == Some(a),
                _ => false,
            };
            if !same {
                return Err(format!("{v} parsed as {back}"));
            }
        }
    }
    Ok(())
}

fn michaelis_mybe(rng: &mut TestRng, cfg: &Config, n: usize) -> Result<(), String> {
    for _ in 0..n {
        let (d, a) = random::michaelis_params(rng, cfg.radius);
        let r = michaelis_r(&d, &a).map_err(|e| e.to_string())?;
        let x = random::element(rng, 3, cfg.radius);
        if !virbialg_core::mybe_defect(&r, &x).is_zero() {
            return Err(format!("r = {r}, x = {x}"));
        }
    }
    Ok(())
}

pub const CHECKS: &[(&str, Check, usize)] = &[
    ("jacobi", jacobi, 200),
    ("michaelis axioms", michaelis_axioms, 10),
    ("michaelis mybe", michaelis_mybe, 20),
    ("bridge identity", bridge, 40),
    ("centralizer witness", centralizer, 20),
    ("inner witness round trip", round_trips, 20),
    ("antisymmetric reduction", reduction, 40),
    ("print/parse round trip", print_parse, 100),
];

pub fn run_all(seed: u64, cfg: &Config) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(k, (name, check, cases))| {
            let mut rng = random::rng(seed.wrapping_add(k as u64));
            CheckResult {
                name,
                cases: *cases,
                failure: check(&mut rng, cfg, *cases).err(),
            }
        })
        .collect()
}
