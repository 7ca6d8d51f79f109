//! Derivations `L(Γ) → L⊗L`, recovery of inner witnesses, centralizer
//! witnesses, antisymmetric reduction, and the classification pipeline.
//!
//! Every successful result carries data that is re-checked by direct
//! computation before it is returned: witnesses reproduce the derivation on
//! the window, probes are re-applied, residuals are recomputed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{bracket, BasisSym, LieElt};
use crate::bialgebra::cybe_residual;
use crate::combination::{degree_decompose, Key};
use crate::error::{Error, Result};
use crate::lattice::{pairing, separating_cartan, CartanElt, Degree};
use crate::linsolve::{SparseRow, SparseSystem};
use crate::scalar::Scalar;
use crate::table::DerivationSpec;
use crate::tensor::{act, act2, alt, antisym_defect, basis2, Tensor, Tensor2, Tensor3};

/// Tunables shared by the solvers and probe searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Box radius bounding the degrees added when the degree-0 unknown space
    /// is expanded by one bracket step.
    pub radius: i64,
    /// Maximum number of probes tried by witness searches.
    pub budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            radius: 5,
            budget: 64,
        }
    }
}

/// The default classification window `{∂₁, ∂₂, L_(±1;0), L_(0;±1), L_(1;1), L_(-1;-1)}`.
pub fn standard_window() -> Vec<BasisSym> {
    crate::lattice::Lattice::standard()
        .coordinate_change()
        .expect("standard lattice is nondegenerate")
        .standard_window()
}

fn elt(s: &BasisSym) -> LieElt {
    LieElt::from_key(s.clone())
}

/// `D([x,y]) − x·D(y) + y·D(x)`.
pub fn derivation_defect(d: &DerivationSpec, x: &BasisSym, y: &BasisSym) -> Result<Tensor2> {
    let dx = d.eval_sym(x)?;
    let dy = d.eval_sym(y)?;
    let (xe, ye) = (elt(x), elt(y));
    let mut out = d.eval(&bracket(&xe, &ye))?;
    out -= &act2(&xe, dy);
    out += &act2(&ye, dx);
    Ok(out)
}

pub type Pair = (BasisSym, BasisSym);

/// Unordered window pairs whose bracket stays in the span of the window,
/// with their derivation defects; the second list holds the pairs that could
/// not be checked.
pub fn derivation_defects(d: &DerivationSpec) -> (Vec<(Pair, Tensor2)>, Vec<Pair>) {
    let w = d.window();
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for (i, x) in w.iter().enumerate() {
        for y in &w[i + 1..] {
            match derivation_defect(d, x, y) {
                Ok(t) => checked.push(((x.clone(), y.clone()), t)),
                Err(_) => skipped.push((x.clone(), y.clone())),
            }
        }
    }
    (checked, skipped)
}

/// Inner witness `a` of a homogeneous derivation of nonzero degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousWitness {
    pub degree: Degree,
    /// The separating `∂` with `⟨∂, α⟩ ≠ 0` used to read off `a`.
    pub cartan: CartanElt,
    pub witness: Tensor2,
    /// Window symbols on which `D(x) = x·a` was re-checked.
    pub verified: Vec<BasisSym>,
}

/// Recovers `a = ⟨∂,α⟩⁻¹ D(∂)` for `D` homogeneous of degree `α ≠ 0`.
///
/// Applying `D` to `[∂, x] = ⟨∂,β⟩x` for `x` of degree `β` gives
/// `⟨∂,α+β⟩D(x) − x·D(∂) = ⟨∂,β⟩D(x)`, so `D(x) = x·a`. The identity is
/// re-checked on every window symbol.
pub fn inner_witness_homogeneous(d: &DerivationSpec, alpha: &Degree) -> Result<HomogeneousWitness> {
    if alpha.is_zero() {
        return Err(Error::NotHomogeneous {
            degree: alpha.clone(),
            at: None,
        });
    }
    for (s, v) in d.values() {
        let target = alpha + &s.degree();
        if v.keys().any(|k| k.degree() != target) {
            return Err(Error::NotHomogeneous {
                degree: alpha.clone(),
                at: Some(s.clone()),
            });
        }
    }
    let cartan = separating_cartan([alpha])?;
    let scale = pairing(&cartan, alpha).inv()?;
    let witness = d.eval(&cartan.to_elt())?.scale(&scale);
    let mut verified = Vec::new();
    for s in d.window() {
        if d.eval_sym(s)? != &act2(&elt(s), &witness) {
            return Err(Error::VerificationFailed(s.clone()));
        }
        verified.push(s.clone());
    }
    Ok(HomogeneousWitness {
        degree: alpha.clone(),
        cartan,
        witness,
        verified,
    })
}

/// Why the degree-0 window system had no solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoSolutionCause {
    /// The cocycle relation fails on this window pair.
    NotACocycle(BasisSym, BasisSym),
    /// The table is a cocycle on every checkable pair, but no witness exists
    /// in the truncated unknown space.
    WindowTooSmall,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoSolutionDiagnostics {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub augmented_rank: usize,
    pub cause: NoSolutionCause,
}

impl fmt::Display for NoSolutionDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} unknowns, {} equations, rank {} < augmented rank {}; ",
            self.unknowns, self.equations, self.rank, self.augmented_rank
        )?;
        match &self.cause {
            NoSolutionCause::NotACocycle(x, y) => write!(f, "cocycle relation fails at ({x}, {y})"),
            NoSolutionCause::WindowTooSmall => f.write_str("window or unknown space too small"),
        }
    }
}

/// A degree-0 inner witness found by the window solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowWitness {
    pub witness: Tensor2,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
}

fn in_box(d: &Degree, radius: i64) -> bool {
    let r = Scalar::from_int(radius);
    [d.c1.re(), d.c1.im(), d.c2.re(), d.c2.im()]
        .into_iter()
        .all(|q| {
            let s = Scalar::real(q.clone());
            s <= r && s >= -&r
        })
}

/// Candidate `β` for unknowns `L_β ⊗ L_{-β}`: factor degrees read off the
/// table values, the window degrees and their pairwise differences, then one
/// bracket step by window degrees (kept only inside the configured box).
fn candidate_degrees(d: &DerivationSpec, radius: i64) -> BTreeSet<Degree> {
    let wdeg: Vec<Degree> = d
        .window()
        .iter()
        .map(BasisSym::degree)
        .filter(|g| !g.is_zero())
        .collect();
    let mut seed = BTreeSet::new();
    for v in d.values().values() {
        for [a, b] in v.keys() {
            if let (BasisSym::L(da), BasisSym::L(db)) = (a, b) {
                seed.insert(da.clone());
                seed.insert(-db);
            }
        }
    }
    for a in &wdeg {
        seed.insert(a.clone());
        for b in &wdeg {
            seed.insert(a - b);
        }
    }
    let mut out = BTreeSet::new();
    for beta in &seed {
        out.insert(beta.clone());
        out.insert(-beta);
        for g in &wdeg {
            for cand in [beta + g, beta - g] {
                if in_box(&cand, radius) {
                    out.insert(-&cand);
                    out.insert(cand);
                }
            }
        }
    }
    out.remove(&Degree::zero());
    out
}

/// Solves `x·u = D(x)` for `u ∈ V₀` over every window symbol `x`.
///
/// Unknowns are the four `∂ᵢ⊗∂ⱼ` and `L_β⊗L_{-β}` for `β` from
/// [`candidate_degrees`]. On a finite window the map `u ↦ (x·u)ₓ` is
/// injective on finitely supported `V₀` once the window contains two
/// independent degrees, so a solution, when found, is unique.
pub fn inner_witness_window(d: &DerivationSpec, config: &Config) -> Result<WindowWitness> {
    let mut unknowns: Vec<[BasisSym; 2]> = Vec::new();
    for a in [BasisSym::D1, BasisSym::D2] {
        for b in [BasisSym::D1, BasisSym::D2] {
            unknowns.push([a.clone(), b]);
        }
    }
    for beta in candidate_degrees(d, config.radius) {
        unknowns.push([BasisSym::L(beta.clone()), BasisSym::L(-beta)]);
    }

    let mut sys = SparseSystem::new(unknowns.len());
    for s in d.window() {
        let x = elt(s);
        let mut rows: BTreeMap<[BasisSym; 2], SparseRow> = BTreeMap::new();
        for (j, key) in unknowns.iter().enumerate() {
            let image = act2(&x, &Tensor2::from_key(key.clone()));
            for (k, c) in image {
                rows.entry(k).or_default().insert(j, c);
            }
        }
        let target = d.eval_sym(s)?;
        for (k, c) in target.iter() {
            rows.entry(k.clone()).or_default();
            let _ = c;
        }
        for (k, row) in rows {
            let rhs = target.coeff(&k);
            sys.push(row, rhs);
        }
    }

    let sol = sys.solve();
    let Some(values) = sol.values else {
        let (checked, _) = derivation_defects(d);
        let cause = checked
            .into_iter()
            .find(|(_, t)| !t.is_zero())
            .map_or(NoSolutionCause::WindowTooSmall, |((x, y), _)| {
                NoSolutionCause::NotACocycle(x, y)
            });
        return Err(Error::NoSolution(NoSolutionDiagnostics {
            unknowns: sol.ncols,
            equations: sol.nrows,
            rank: sol.rank,
            augmented_rank: sol.augmented_rank,
            cause,
        }));
    };
    let witness: Tensor2 = unknowns.into_iter().zip(values).collect();
    for s in d.window() {
        if d.eval_sym(s)? != &act2(&elt(s), &witness) {
            return Err(Error::VerificationFailed(s.clone()));
        }
    }
    Ok(WindowWitness {
        witness,
        unknowns: sol.ncols,
        equations: sol.nrows,
        rank: sol.rank,
    })
}

/// An element `x` with `x·c ≠ 0`, together with the probes tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerWitness<const N: usize> {
    pub probe: LieElt,
    pub image: Tensor<N>,
    /// Probes tried before the witness, in order.
    pub tried: Vec<LieElt>,
}

fn factor_degrees<const N: usize>(c: &Tensor<N>) -> BTreeSet<Degree> {
    c.keys()
        .flat_map(|k| k.iter().map(BasisSym::degree))
        .filter(|d| !d.is_zero())
        .collect()
}

/// The fixed probe order for [`centralizer_witness`].
pub fn centralizer_schedule<const N: usize>(c: &Tensor<N>) -> Vec<LieElt> {
    let mut probes: Vec<LieElt> = Vec::new();
    let nonzero: Vec<Degree> = degree_decompose(c)
        .into_keys()
        .filter(|d| !d.is_zero())
        .collect();
    if !nonzero.is_empty() {
        let d = separating_cartan(&nonzero).expect("degrees are nonzero");
        probes.push(d.to_elt());
    }
    probes.push(LieElt::d1());
    probes.push(LieElt::d2());
    let support = factor_degrees(c);
    let mut diffs = BTreeSet::new();
    for a in &support {
        for b in &support {
            let d = a - b;
            if !d.is_zero() {
                diffs.insert(d);
            }
        }
    }
    probes.extend(diffs.into_iter().map(LieElt::l));
    for (p, q) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
        probes.push(LieElt::l(Degree::int(p, q)));
    }
    probes.extend(support.into_iter().map(LieElt::l));
    let mut seen = BTreeSet::new();
    probes.retain(|p| seen.insert(p.to_string()));
    probes
}

/// Finds `x ∈ L(Γ)` with `x·c ≠ 0` for nonzero `c ∈ L^{⊗N}`.
///
/// Such an `x` always exists; running out of budget means the probe
/// schedule needs extending, never that `c` is invariant.
pub fn centralizer_witness<const N: usize>(
    c: &Tensor<N>,
    config: &Config,
) -> Result<CentralizerWitness<N>> {
    if c.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let mut tried = Vec::new();
    for probe in centralizer_schedule(c).into_iter().take(config.budget) {
        let image = act(&probe, c);
        if !image.is_zero() {
            return Ok(CentralizerWitness {
                probe,
                image,
                tried,
            });
        }
        tried.push(probe);
    }
    Err(Error::InconclusiveBudgetExhausted {
        probes: tried.len(),
    })
}

/// Result of [`reduce_to_antisymmetric`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// `r = (1 − τ)·witness + residual` with `residual = 0`.
    Antisymmetric {
        witness: Tensor2,
        residual: Tensor2,
        log: Vec<String>,
    },
    /// `probe·r ∉ Im(1 − τ)`; `defect = probe·r + τ(probe·r) ≠ 0`.
    Counterexample {
        probe: LieElt,
        defect: Tensor2,
        log: Vec<String>,
    },
}

impl Reduction {
    pub fn is_antisymmetric(&self) -> bool {
        matches!(self, Reduction::Antisymmetric { .. })
    }

    pub fn log(&self) -> &[String] {
        match self {
            Reduction::Antisymmetric { log, .. } | Reduction::Counterexample { log, .. } => log,
        }
    }
}

/// `L_(s;t)` probes with `s, t > 0` and `sq − pt ≠ 0` for the degree
/// `(p, q)`, smallest `s + t` first.
fn positive_probes(pq: &Degree, limit: usize) -> Vec<Degree> {
    let mut out = Vec::new();
    for total in 2i64.. {
        for s in 1..total {
            let st = Degree::int(s, total - s);
            if !st.det(pq).is_zero() {
                out.push(st);
                if out.len() == limit {
                    return out;
                }
            }
        }
    }
    out
}

/// Decides `r ∈ Im(1 − τ)` constructively.
///
/// Nonzero-degree components are tested with one separating `∂`. In
/// degree 0, terms `L_β⊗L_{-β}` with `β < 0` are moved onto `L_{-β}⊗L_β` by
/// subtracting multiples of `(1 − τ)(L_β⊗L_{-β})`, leaving only positive
/// first degrees. What survives is either antisymmetric (only a `∂⊗∂` block
/// remains) or detected by `L_(1;0)`, `L_(0;1)` or an `L_(s;t)` probe aimed
/// at the largest surviving degree, whose image term `L_{β+(s,t)}⊗L_{-β}`
/// cannot be matched by its twist.
pub fn reduce_to_antisymmetric(r: &Tensor2, config: &Config) -> Result<Reduction> {
    let mut log = Vec::new();
    let mut witness = Tensor2::zero();
    let parts = degree_decompose(r);
    let half = Scalar::ratio(1, 2);

    let nonzero: Vec<&Degree> = parts.keys().filter(|d| !d.is_zero()).collect();
    if !nonzero.is_empty() {
        let cartan = separating_cartan(nonzero.iter().copied())?;
        let probe = cartan.to_elt();
        let defect = antisym_defect(&act2(&probe, r));
        log.push(format!(
            "probe {probe}: separates {} nonzero degrees",
            nonzero.len()
        ));
        if !defect.is_zero() {
            return Ok(Reduction::Counterexample { probe, defect, log });
        }
        for d in nonzero {
            let part = &parts[d];
            debug_assert!(antisym_defect(part).is_zero());
            witness.add_scaled(part, &half);
        }
    }

    let mut r0 = parts.get(&Degree::zero()).cloned().unwrap_or_default();
    let negative: Vec<([BasisSym; 2], Scalar)> = r0
        .iter()
        .filter(|([a, _], _)| matches!(a, BasisSym::L(d) if !d.is_positive()))
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect();
    for (key, c) in negative {
        let step = Tensor2::from_term(key, c);
        r0 -= &alt(&step);
        witness += &step;
    }
    if parts.contains_key(&Degree::zero()) {
        log.push(format!("normalized degree 0: {r0}"));
    }

    if antisym_defect(&r0).is_zero() {
        witness.add_scaled(&r0, &half);
        let residual = r - &alt(&witness);
        debug_assert!(residual.is_zero());
        return Ok(Reduction::Antisymmetric {
            witness,
            residual,
            log,
        });
    }

    let mut probes = vec![Degree::int(1, 0), Degree::int(0, 1)];
    let mut survivors: Vec<Degree> = r0
        .keys()
        .filter_map(|[a, _]| match a {
            BasisSym::L(d) => Some(d.clone()),
            _ => None,
        })
        .collect();
    survivors.sort();
    survivors.dedup();
    for beta in survivors.iter().rev() {
        probes.extend(positive_probes(beta, 2));
    }
    for deg in probes.into_iter().take(config.budget) {
        let probe = LieElt::l(deg);
        let defect = antisym_defect(&act2(&probe, r));
        if !defect.is_zero() {
            log.push(format!("probe {probe}: image not antisymmetric"));
            return Ok(Reduction::Counterexample { probe, defect, log });
        }
        log.push(format!("probe {probe}: image antisymmetric"));
    }
    Err(Error::InconclusiveBudgetExhausted { probes: log.len() })
}

/// Final outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    TriangularCoboundary,
    NotADerivation(BasisSym, BasisSym),
    /// Inner witness recovery failed; carries the sub-operation's error.
    RecoveryFailed(String),
    NotAntisymmetric(LieElt),
    CybeFails(Tensor3),
}

impl Verdict {
    pub fn is_success(&self) -> bool {
        matches!(self, Verdict::TriangularCoboundary)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::TriangularCoboundary => f.write_str("TriangularCoboundary"),
            Verdict::NotADerivation(x, y) => write!(f, "NotADerivation({x}, {y})"),
            Verdict::RecoveryFailed(e) => write!(f, "RecoveryFailed({e})"),
            Verdict::NotAntisymmetric(p) => write!(f, "NotAntisymmetric({p})"),
            Verdict::CybeFails(_) => f.write_str("CYBEFails"),
        }
    }
}

/// Everything the classification pipeline produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Recovered `r` with `Δ = Δ_r` on the window, when recovery succeeded.
    pub r: Option<Tensor2>,
    /// Per-degree inner witnesses summing to `r`.
    pub components: Vec<(Degree, Tensor2)>,
    /// Derivation defects of the checked window pairs.
    pub derivation_defects: Vec<((BasisSym, BasisSym), Tensor2)>,
    /// Window pairs whose bracket leaves the window.
    pub skipped_pairs: Vec<(BasisSym, BasisSym)>,
    pub reduction: Option<Reduction>,
    pub cybe: Option<Tensor3>,
    pub log: Vec<String>,
}

/// Runs the full pipeline on a tabulated cobracket: derivation check, inner
/// witness recovery per homogeneous degree, antisymmetric reduction, and the
/// classical Yang–Baxter check on the recovered `r`.
pub fn classify(delta: &DerivationSpec, config: &Config) -> Classification {
    let mut out = Classification {
        verdict: Verdict::TriangularCoboundary,
        r: None,
        components: Vec::new(),
        derivation_defects: Vec::new(),
        skipped_pairs: Vec::new(),
        reduction: None,
        cybe: None,
        log: Vec::new(),
    };

    let (checked, skipped) = derivation_defects(delta);
    out.log.push(format!(
        "derivation: {} pairs checked, {} outside window",
        checked.len(),
        skipped.len()
    ));
    let failure = checked
        .iter()
        .find(|(_, t)| !t.is_zero())
        .map(|((x, y), _)| (x.clone(), y.clone()));
    out.derivation_defects = checked;
    out.skipped_pairs = skipped;
    if let Some((x, y)) = failure {
        out.verdict = Verdict::NotADerivation(x, y);
        return out;
    }

    let mut r = Tensor2::zero();
    let mut degrees = delta.component_degrees();
    degrees.insert(Degree::zero());
    for alpha in degrees {
        let part = delta.component(&alpha);
        let recovered = if alpha.is_zero() {
            inner_witness_window(&part, config).map(|w| {
                out.log.push(format!(
                    "degree {alpha}: window solve, {} unknowns, {} equations, rank {}",
                    w.unknowns, w.equations, w.rank
                ));
                w.witness
            })
        } else {
            inner_witness_homogeneous(&part, &alpha).map(|w| {
                out.log
                    .push(format!("degree {alpha}: separating {}", w.cartan));
                w.witness
            })
        };
        match recovered {
            Ok(w) => {
                if !w.is_zero() {
                    r += &w;
                    out.components.push((alpha, w));
                }
            }
            Err(e) => {
                out.verdict = Verdict::RecoveryFailed(format!("degree {alpha}: {e}"));
                return out;
            }
        }
    }
    for s in delta.window() {
        if delta.eval_sym(s).ok() != Some(&act2(&elt(s), &r)) {
            out.verdict = Verdict::RecoveryFailed(format!("recovered r disagrees at {s}"));
            return out;
        }
    }
    out.r = Some(r.clone());

    match reduce_to_antisymmetric(&r, config) {
        Ok(red) => {
            let probe = match &red {
                Reduction::Counterexample { probe, .. } => Some(probe.clone()),
                Reduction::Antisymmetric { .. } => None,
            };
            out.reduction = Some(red);
            if let Some(p) = probe {
                out.verdict = Verdict::NotAntisymmetric(p);
                return out;
            }
        }
        Err(e) => {
            out.verdict = Verdict::RecoveryFailed(format!("antisymmetric reduction: {e}"));
            return out;
        }
    }

    let c = cybe_residual(&r);
    out.cybe = Some(c.clone());
    if !c.is_zero() {
        out.verdict = Verdict::CybeFails(c);
    }
    out
}

/// `∂ᵢ⊗∂ⱼ` shorthand used by tests and callers building `V₀` elements.
pub fn cartan_pair(i: usize, j: usize, c: Scalar) -> Tensor2 {
    basis2(BasisSym::d(i), BasisSym::d(j), c)
}
