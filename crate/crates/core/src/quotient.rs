//! Isotone maps on product posets, their fibers, kernel bases of variable
//! differences, regular-sequence certification and separations.
//!
//! A `FiberedMap` records the product structure Q x P of its source because
//! the chain conditions on fibers are evaluated in Q x P^op: a fiber is a
//! left strict chain if any two of its elements are comparable there with
//! strictly increasing left coordinates, and bistrict if the right
//! coordinates also move strictly.

use std::collections::HashMap;
use std::sync::Arc;

use crate::letterplace::{pair_index, pair_vars};
use crate::monomial::{alexander_dual_checked, Monomial, MonomialIdeal};
use crate::poset::Poset;
use crate::{Error, Result};

/// Default cap on the number of lcm divisors the zerodivisor oracle and the
/// associated-prime enumeration may visit.
pub const DEFAULT_DIVISOR_BUDGET: usize = 1 << 20;
/// Divisor count up to which the squarefree face oracle is cross-checked
/// against the associated-prime oracle.
const ORACLE_CROSSCHECK_CAP: usize = 1 << 12;

/// Ring variable for a poset element.
pub fn var_label(label: &str) -> String {
    format!("x{}", label)
}

/// Variable labels for the ring k[x_R] over a target poset.
pub fn poset_vars(p: &Poset) -> Vec<String> {
    p.labels().iter().map(|l| var_label(l)).collect()
}

/// An isotone map from a product poset Q x P onto a target poset, with its
/// fibers precomputed in a deterministic order.
#[derive(Clone, Debug)]
pub struct FiberedMap {
    pub left: Arc<Poset>,
    pub right: Arc<Poset>,
    pub source: Arc<Poset>,
    pub target: Arc<Poset>,
    assignment: Vec<usize>,
    fibers: Vec<Vec<usize>>,
}

impl FiberedMap {
    /// Build from an assignment on source indices (row-major over Q x P).
    pub fn new(
        left: &Poset,
        right: &Poset,
        target: &Poset,
        assignment: Vec<usize>,
    ) -> Result<FiberedMap> {
        let source = Poset::product(left, right);
        if assignment.len() != source.len() {
            return Err(Error::Invalid("assignment length mismatch".into()));
        }
        for &v in &assignment {
            if v >= target.len() {
                return Err(Error::Invalid("assignment target out of range".into()));
            }
        }
        for i in 0..source.len() {
            for j in 0..source.len() {
                if source.leq(i, j) && !target.leq(assignment[i], assignment[j]) {
                    return Err(Error::Invalid(format!(
                        "map is not isotone at {} <= {}",
                        source.label(i),
                        source.label(j)
                    )));
                }
            }
        }
        // fibers ordered by the source linear extension
        let ext = source.linear_extension();
        let mut fibers = vec![Vec::new(); target.len()];
        for &e in &ext {
            fibers[assignment[e]].push(e);
        }
        Ok(FiberedMap {
            left: Arc::new(left.clone()),
            right: Arc::new(right.clone()),
            source: Arc::new(source),
            target: Arc::new(target.clone()),
            assignment,
            fibers,
        })
    }

    /// Build from labeled pairs (source label, target label).
    pub fn from_pairs(
        left: &Poset,
        right: &Poset,
        target: &Poset,
        pairs: &[(String, String)],
    ) -> Result<FiberedMap> {
        let source = Poset::product(left, right);
        let mut assignment = vec![usize::MAX; source.len()];
        for (s, t) in pairs {
            assignment[source.idx(s)?] = target.idx(t)?;
        }
        if let Some(i) = assignment.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Invalid(format!(
                "map misses source element {}",
                source.label(i)
            )));
        }
        FiberedMap::new(left, right, target, assignment)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    /// Factor indices (ai, bj) of a source element.
    pub fn factor_idx(&self, i: usize) -> (usize, usize) {
        (i / self.right.len(), i % self.right.len())
    }

    pub fn image_size(&self) -> usize {
        self.fibers.iter().filter(|f| !f.is_empty()).count()
    }

    /// The transposed map P x Q -> R, phi^tau(p,q) = phi(q,p).
    pub fn transpose(&self) -> FiberedMap {
        let l = self.left.len();
        let r = self.right.len();
        let assignment: Vec<usize> = (0..r * l)
            .map(|k| {
                let (bi, aj) = (k / l, k % l);
                self.assignment[pair_index(r, aj, bi)]
            })
            .collect();
        FiberedMap::new(&self.right, &self.left, &self.target, assignment)
            .expect("transpose of an isotone map on the swapped product is isotone")
    }
}

/// Classification of a single fiber as a chain in Q x P^op.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    pub target: usize,
    pub elements: Vec<usize>,
    pub chain: bool,
    pub left_strict: bool,
    pub right_strict: bool,
    pub bistrict: bool,
}

#[derive(Clone, Debug)]
pub struct FiberReport {
    pub fibers: Vec<FiberClass>,
    pub all_chains: bool,
    pub all_left_strict: bool,
    pub all_right_strict: bool,
    pub all_bistrict: bool,
}

/// Evaluate every fiber of the map as a subset of Q x P^op.
pub fn classify_fibers(f: &FiberedMap) -> FiberReport {
    let mut fibers = Vec::new();
    for (t, elems) in f.fibers().iter().enumerate() {
        if elems.is_empty() {
            continue;
        }
        let mut chain = true;
        let mut left_strict = true;
        let mut right_strict = true;
        for (k, &u) in elems.iter().enumerate() {
            for &v in &elems[k + 1..] {
                let (qu, pu) = f.factor_idx(u);
                let (qv, pv) = f.factor_idx(v);
                // comparability in Q x P^op
                let u_le_v = f.left.leq(qu, qv) && f.right.leq(pv, pu);
                let v_le_u = f.left.leq(qv, qu) && f.right.leq(pu, pv);
                if !u_le_v && !v_le_u {
                    chain = false;
                    continue;
                }
                let (lo_q, lo_p, hi_q, hi_p) = if u_le_v {
                    (qu, pu, qv, pv)
                } else {
                    (qv, pv, qu, pu)
                };
                if !f.left.less(lo_q, hi_q) {
                    left_strict = false;
                }
                if !f.right.less(hi_p, lo_p) {
                    right_strict = false;
                }
            }
        }
        let left_strict = chain && left_strict;
        let right_strict = chain && right_strict;
        fibers.push(FiberClass {
            target: t,
            elements: elems.clone(),
            chain,
            left_strict,
            right_strict,
            bistrict: left_strict && right_strict,
        });
    }
    FiberReport {
        all_chains: fibers.iter().all(|c| c.chain),
        all_left_strict: fibers.iter().all(|c| c.left_strict),
        all_right_strict: fibers.iter().all(|c| c.right_strict),
        all_bistrict: fibers.iter().all(|c| c.bistrict),
        fibers,
    }
}

/// Basis of the kernel of the degree-one part of the map: for each fiber of
/// size k, the k-1 consecutive differences along the fixed fiber ordering.
/// Pairs are source element indices (a, b) meaning x_a - x_b.
pub fn kernel_basis(f: &FiberedMap) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for fiber in f.fibers() {
        for w in fiber.windows(2) {
            out.push((w[0], w[1]));
        }
    }
    out
}

/// The image of an ideal over k[x_{Q x P}] in k[x_R].
pub fn quotient_ideal(ideal: &MonomialIdeal, f: &FiberedMap) -> Result<MonomialIdeal> {
    let expected = pair_vars(&f.left, &f.right);
    if ideal.vars() != expected.as_slice() {
        return Err(Error::AmbientMismatch(
            "ideal variables do not match the map's source".into(),
        ));
    }
    ideal.substitute_indices(f.assignment(), poset_vars(&f.target))
}

/// Witness that a variable difference is a zerodivisor: a monomial m outside
/// the ideal with both x_a * m and x_b * m inside. For squarefree ideals the
/// support of m is a face with the two extension properties.
#[derive(Clone, Debug)]
pub struct ZerodivisorWitness {
    pub monomial: Monomial,
}

/// Decide whether x_a - x_b is a zerodivisor on S/I.
///
/// The criterion is the associated-prime one: the difference is a
/// zerodivisor iff some associated prime (I : m) contains both variables,
/// i.e. iff some monomial m outside I has x_a m and x_b m in I. For
/// squarefree ideals an equivalent face search runs instead (a face F
/// avoiding a and b whose extensions by a and by b are both nonfaces); on
/// small inputs both oracles run and must agree.
pub fn zerodivisor_witness(
    ideal: &MonomialIdeal,
    a: usize,
    b: usize,
    divisor_budget: usize,
) -> Result<Option<ZerodivisorWitness>> {
    if a == b {
        return Err(Error::Invalid(
            "difference of identical variables".into(),
        ));
    }
    if ideal.is_zero() {
        return Ok(None);
    }
    let lcm = ideal.lcm_of_gens();
    let divisor_count: u128 = lcm.exps().iter().map(|&(_, e)| e as u128 + 1).product();
    if ideal.is_squarefree() {
        let face = face_oracle(ideal, a, b);
        if divisor_count <= ORACLE_CROSSCHECK_CAP as u128 {
            let assoc = associated_prime_oracle(ideal, a, b, &lcm);
            if face.is_some() != assoc.is_some() {
                return Err(Error::Bug(format!(
                    "face and associated-prime oracles disagree on {ideal:?} for {} - {}",
                    ideal.vars()[a],
                    ideal.vars()[b]
                )));
            }
        }
        return Ok(face);
    }
    if divisor_count > divisor_budget as u128 {
        return Err(Error::Budget {
            what: "lcm divisors",
            count: divisor_count.min(usize::MAX as u128) as usize,
            budget: divisor_budget,
        });
    }
    Ok(associated_prime_oracle(ideal, a, b, &lcm))
}

fn associated_prime_oracle(
    ideal: &MonomialIdeal,
    a: usize,
    b: usize,
    lcm: &Monomial,
) -> Option<ZerodivisorWitness> {
    let xa = Monomial::var(a);
    let xb = Monomial::var(b);
    let mut divisor: Vec<u64> = vec![0; lcm.exps().len()];
    loop {
        let m = Monomial::from_exps(
            lcm.exps()
                .iter()
                .zip(&divisor)
                .map(|(&(v, _), &e)| (v, e))
                .collect(),
        );
        if !ideal.contains(&m) && ideal.contains(&m.mul(&xa)) && ideal.contains(&m.mul(&xb)) {
            return Some(ZerodivisorWitness { monomial: m });
        }
        let mut k = 0;
        loop {
            if k == divisor.len() {
                return None;
            }
            if divisor[k] < lcm.exps()[k].1 {
                divisor[k] += 1;
                break;
            }
            divisor[k] = 0;
            k += 1;
        }
    }
}

/// Face oracle for squarefree ideals: the minimal candidate faces are
/// (g1 \ a) union (g2 \ b) over generators g1 containing a and g2
/// containing b.
fn face_oracle(ideal: &MonomialIdeal, a: usize, b: usize) -> Option<ZerodivisorWitness> {
    let supports = ideal.supports();
    for g1 in &supports {
        if !g1.contains(a) || g1.contains(b) {
            continue;
        }
        for g2 in &supports {
            if !g2.contains(b) || g2.contains(a) {
                continue;
            }
            let mut face = g1.clone();
            face.union_with(g2);
            face.remove(a);
            face.remove(b);
            if supports.iter().all(|s| !s.is_subset(&face)) {
                let m = Monomial::from_support(&face);
                debug_assert!(!ideal.contains(&m));
                return Some(ZerodivisorWitness { monomial: m });
            }
        }
    }
    None
}

/// Result of checking one difference of a sequence.
#[derive(Clone, Debug)]
pub enum RegSeqOutcome {
    Regular,
    Zerodivisor {
        step: usize,
        diff: (String, String),
        witness: ZerodivisorWitness,
        /// The ideal on which the failing difference was tested.
        ambient: MonomialIdeal,
    },
}

#[derive(Clone, Debug)]
pub struct RegSeqReport {
    pub outcome: RegSeqOutcome,
    /// The successive quotient ideal after all verified steps.
    pub final_ideal: MonomialIdeal,
}

impl RegSeqReport {
    pub fn is_regular(&self) -> bool {
        matches!(self.outcome, RegSeqOutcome::Regular)
    }
}

/// Check an ordered sequence of variable differences against the ideal,
/// substituting after each regular step (the second variable of each
/// difference absorbs the first).
pub fn is_regular_sequence(
    ideal: &MonomialIdeal,
    diffs: &[(String, String)],
    divisor_budget: usize,
) -> Result<RegSeqReport> {
    let mut current = ideal.clone();
    // merged variable labels map to their representative in `current`
    let mut rep: HashMap<String, String> = HashMap::new();
    for (step, (la, lb)) in diffs.iter().enumerate() {
        let la = rep.get(la).cloned().unwrap_or_else(|| la.clone());
        let lb = rep.get(lb).cloned().unwrap_or_else(|| lb.clone());
        let a = current.var_index(&la)?;
        let b = current.var_index(&lb)?;
        if a == b {
            return Err(Error::Invalid(format!(
                "difference {la} - {lb} collapses to zero after earlier merges"
            )));
        }
        if let Some(witness) = zerodivisor_witness(&current, a, b, divisor_budget)? {
            return Ok(RegSeqReport {
                outcome: RegSeqOutcome::Zerodivisor {
                    step,
                    diff: (la, lb),
                    witness,
                    ambient: current.clone(),
                },
                final_ideal: ideal.clone(),
            });
        }
        // merge a into b
        let new_vars: Vec<String> = current
            .vars()
            .iter()
            .filter(|&v| *v != la)
            .cloned()
            .collect();
        let map: HashMap<String, String> = current
            .vars()
            .iter()
            .map(|v| {
                let to = if *v == la { lb.clone() } else { v.clone() };
                (v.clone(), to)
            })
            .collect();
        current = current.substitute(&map, new_vars)?;
        for v in rep.values_mut() {
            if *v == la {
                *v = lb.clone();
            }
        }
        rep.insert(la, lb);
    }
    Ok(RegSeqReport {
        outcome: RegSeqOutcome::Regular,
        final_ideal: current,
    })
}

/// Kernel-basis differences as variable label pairs in pair_vars order.
pub fn kernel_basis_labels(f: &FiberedMap) -> Vec<(String, String)> {
    let vars = pair_vars(&f.left, &f.right);
    kernel_basis(f)
        .into_iter()
        .map(|(a, b)| (vars[a].clone(), vars[b].clone()))
        .collect()
}

/// A verified separation of a monomial ideal.
#[derive(Clone, Debug)]
pub struct SeparationWitness {
    pub split_variable: String,
    pub new_labels: (String, String),
    pub lifted_ideal: MonomialIdeal,
    pub regular_difference: (String, String),
}

#[derive(Clone, Debug)]
pub struct SeparationReport {
    pub witness: Option<SeparationWitness>,
    pub exhaustive: bool,
    pub candidates_tried: usize,
}

impl SeparationReport {
    pub fn separable(&self) -> bool {
        self.witness.is_some()
    }
}

/// Search for a separation: for each variable v, distribute the v-exponent
/// of every v-using minimal generator between two fresh variables v', v''
/// (all distributions, not only generatorwise ones, so polarization-style
/// lifts are found), and test the separation conditions: the image recovers
/// the ideal by construction, both new variables must occur among minimal
/// generators, and their difference must be regular on the lifted ring.
pub fn separations(ideal: &MonomialIdeal, candidate_budget: usize) -> Result<SeparationReport> {
    let mut tried = 0usize;
    for (v, vlabel) in ideal.vars().iter().enumerate() {
        let users: Vec<usize> = (0..ideal.gens().len())
            .filter(|&g| ideal.gens()[g].exponent(v) > 0)
            .collect();
        if users.is_empty() {
            continue;
        }
        let mut l1 = format!("{vlabel}'");
        let mut l2 = format!("{vlabel}''");
        while ideal.vars().contains(&l1) || ideal.vars().contains(&l2) {
            l1.push('\'');
            l2.push('\'');
        }
        // lifted ring: v replaced in place by v', v''
        let mut new_vars = Vec::with_capacity(ideal.nvars() + 1);
        for (i, lab) in ideal.vars().iter().enumerate() {
            if i == v {
                new_vars.push(l1.clone());
                new_vars.push(l2.clone());
            } else {
                new_vars.push(lab.clone());
            }
        }
        let reindex = |i: usize| if i < v { i } else { i + 1 };
        let exps: Vec<u64> = users.iter().map(|&g| ideal.gens()[g].exponent(v)).collect();
        let mut split: Vec<u64> = vec![0; users.len()];
        'distributions: loop {
            // split[k] = exponent sent to v' by generator users[k]
            tried += 1;
            if tried > candidate_budget {
                return Ok(SeparationReport {
                    witness: None,
                    exhaustive: false,
                    candidates_tried: tried - 1,
                });
            }
            let some_first = split.iter().any(|&s| s > 0);
            let some_second = split.iter().zip(&exps).any(|(&s, &e)| s < e);
            if some_first && some_second {
                let mut gens = Vec::with_capacity(ideal.gens().len());
                for (gi, g) in ideal.gens().iter().enumerate() {
                    let mut e: Vec<(usize, u64)> = g
                        .exps()
                        .iter()
                        .filter(|&&(w, _)| w != v)
                        .map(|&(w, ex)| (reindex(w), ex))
                        .collect();
                    if let Some(k) = users.iter().position(|&u| u == gi) {
                        e.push((v, split[k]));
                        e.push((v + 1, exps[k] - split[k]));
                    }
                    gens.push(Monomial::from_exps(e));
                }
                let lifted = MonomialIdeal::new(new_vars.clone(), gens)?;
                // conditions: both variables survive among minimal
                // generators, and the difference is regular
                let has1 = lifted.gens().iter().any(|g| g.exponent(v) > 0);
                let has2 = lifted.gens().iter().any(|g| g.exponent(v + 1) > 0);
                if has1 && has2 {
                    let report =
                        is_regular_sequence(&lifted, &[(l1.clone(), l2.clone())], DEFAULT_DIVISOR_BUDGET)?;
                    if report.is_regular() {
                        debug_assert_eq!(
                            {
                                let back: HashMap<String, String> = new_vars
                                    .iter()
                                    .map(|w| {
                                        let to = if *w == l1 || *w == l2 {
                                            vlabel.clone()
                                        } else {
                                            w.clone()
                                        };
                                        (w.clone(), to)
                                    })
                                    .collect();
                                lifted.substitute(&back, ideal.vars().to_vec()).unwrap()
                            },
                            *ideal
                        );
                        return Ok(SeparationReport {
                            witness: Some(SeparationWitness {
                                split_variable: vlabel.clone(),
                                new_labels: (l1.clone(), l2.clone()),
                                lifted_ideal: lifted,
                                regular_difference: (l1, l2),
                            }),
                            exhaustive: false,
                            candidates_tried: tried,
                        });
                    }
                }
            }
            // odometer over exponent distributions
            let mut k = 0;
            loop {
                if k == split.len() {
                    break 'distributions;
                }
                if split[k] < exps[k] {
                    split[k] += 1;
                    break;
                }
                split[k] = 0;
                k += 1;
            }
        }
    }
    Ok(SeparationReport {
        witness: None,
        exhaustive: true,
        candidates_tried: tried,
    })
}

/// Report for the compatibility of Alexander duality with a single regular
/// variable difference.
#[derive(Clone, Debug)]
pub struct DualQuotientReport {
    pub diff_regular_on_ideal: bool,
    pub image_squarefree: bool,
    pub dual_image_squarefree: Option<bool>,
    pub diff_regular_on_dual: Option<bool>,
    /// When the difference is regular and the image squarefree: does the dual
    /// of the image equal the image of the dual?
    pub duality_transfer: Option<bool>,
}

/// Evaluate the three implications tying duality to a quotient by one
/// variable difference: (a) regular difference gives a squarefree image of
/// the dual, (b) a squarefree image makes the difference regular on the
/// dual, (c) both together make the images Alexander dual.
pub fn dual_quotient_compat(
    ideal: &MonomialIdeal,
    diff: (&str, &str),
    divisor_budget: usize,
) -> Result<DualQuotientReport> {
    let a = ideal.var_index(diff.0)?;
    let b = ideal.var_index(diff.1)?;
    if a == b {
        return Err(Error::Invalid("difference of identical variables".into()));
    }
    let dual = alexander_dual_checked(ideal)?;
    let regular_i = zerodivisor_witness(ideal, a, b, divisor_budget)?.is_none();
    let merge = |i: &MonomialIdeal| -> Result<MonomialIdeal> {
        let new_vars: Vec<String> = i
            .vars()
            .iter()
            .filter(|&v| v != diff.0)
            .cloned()
            .collect();
        let map: HashMap<String, String> = i
            .vars()
            .iter()
            .map(|v| {
                let to = if v == diff.0 {
                    diff.1.to_string()
                } else {
                    v.clone()
                };
                (v.clone(), to)
            })
            .collect();
        i.substitute(&map, new_vars)
    };
    let i1 = merge(ideal)?;
    let j1 = merge(&dual)?;
    let image_squarefree = i1.is_squarefree();
    let mut report = DualQuotientReport {
        diff_regular_on_ideal: regular_i,
        image_squarefree,
        dual_image_squarefree: None,
        diff_regular_on_dual: None,
        duality_transfer: None,
    };
    if regular_i {
        let ok = j1.is_squarefree();
        if !ok {
            return Err(Error::Bug(
                "regular difference produced a non-squarefree dual image".into(),
            ));
        }
        report.dual_image_squarefree = Some(ok);
    }
    if image_squarefree {
        let ok = zerodivisor_witness(&dual, a, b, divisor_budget)?.is_none();
        if !ok {
            return Err(Error::Bug(
                "squarefree image but difference not regular on the dual".into(),
            ));
        }
        report.diff_regular_on_dual = Some(ok);
    }
    if regular_i && image_squarefree {
        let ok = alexander_dual_checked(&i1)? == j1;
        if !ok {
            return Err(Error::Bug(
                "dual of the image differs from the image of the dual".into(),
            ));
        }
        report.duality_transfer = Some(ok);
    }
    Ok(report)
}

/// Named fibered-map builders used by the derived families and the CLI.
pub mod builders {
    use super::*;

    /// The multichain map [s] x (P x [m]) -> P x [m+s-1], sending
    /// (i, (p, a)) to (p, a + i - 1).
    pub fn multichain(p: &Poset, m: usize, s: usize) -> Result<FiberedMap> {
        if m < 1 || s < 1 {
            return Err(Error::Invalid("multichain needs m, s >= 1".into()));
        }
        let left = Poset::chain(s);
        let pm = Poset::product(p, &Poset::chain(m));
        let target = Poset::product(p, &Poset::chain(m + s - 1));
        let np = p.len();
        let mut assignment = Vec::with_capacity(s * np * m);
        for i in 0..s {
            for pe in 0..np {
                for a in 0..m {
                    assignment.push(pe * (m + s - 1) + (a + i));
                }
            }
        }
        FiberedMap::new(&left, &pm, &target, assignment)
    }

    /// The shifted embedding [s] x ([n] x [m]) -> [n+e_s] x [m+f_s], sending
    /// (i, (a, b)) to (a + e_i, b + f_i). Sequences start at 0 and are
    /// weakly increasing.
    pub fn det_shift(n: usize, m: usize, e: &[usize], f: &[usize]) -> Result<FiberedMap> {
        let s = e.len();
        if s == 0 || f.len() != s {
            return Err(Error::Invalid("shift sequences must have equal positive length".into()));
        }
        if e[0] != 0 || f[0] != 0 {
            return Err(Error::Invalid("shift sequences must start at 0".into()));
        }
        if e.windows(2).any(|w| w[0] > w[1]) || f.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid("shift sequences must be weakly increasing".into()));
        }
        if n < 1 || m < 1 {
            return Err(Error::Invalid("matrix sides must be >= 1".into()));
        }
        let left = Poset::chain(s);
        let grid = Poset::product(&Poset::chain(n), &Poset::chain(m));
        let rows = n + e[s - 1];
        let cols = m + f[s - 1];
        let target = Poset::product(&Poset::chain(rows), &Poset::chain(cols));
        let mut assignment = Vec::with_capacity(s * n * m);
        for i in 0..s {
            for a in 0..n {
                for b in 0..m {
                    assignment.push((a + e[i]) * cols + (b + f[i]));
                }
            }
        }
        FiberedMap::new(&left, &grid, &target, assignment)
    }

    /// Projection of Q x P onto one factor (1 = left, 2 = right).
    pub fn projection(left: &Poset, right: &Poset, factor: usize) -> Result<FiberedMap> {
        let assignment: Vec<usize> = (0..left.len() * right.len())
            .map(|k| match factor {
                1 => k / right.len(),
                2 => k % right.len(),
                _ => usize::MAX,
            })
            .collect();
        if assignment.contains(&usize::MAX) {
            return Err(Error::Invalid("projection factor must be 1 or 2".into()));
        }
        let target = if factor == 1 { left } else { right };
        FiberedMap::new(left, right, target, assignment)
    }

}
