//! Letterplace and co-letterplace ideals.
//!
//! For posets Q and P, the ideal L(Q,P) lives in k[x_{Q x P}] and is
//! generated by the graph monomials of isotone maps Q -> P. Specializing Q
//! or P to a chain gives the letterplace ideal L(n,P) and the co-letterplace
//! ideal L(P,n); restricting the generating maps to a poset ideal J of
//! Hom(P,[n]) gives L(J). This module also computes the Alexander dual of
//! L(J), the linear-quotient certificates with their colon sets, and the
//! constructive witness for the duality of L(n,P) and L(P,n).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::bits::Bits;
use crate::hom::{hom_poset, HomIdeal, IsotoneMap, OrderMode};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::Poset;
use crate::{Error, Result};

/// Variable labels for the ring k[x_{A x B}], row-major with A outer.
pub fn pair_vars(a: &Poset, b: &Poset) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for la in a.labels() {
        for lb in b.labels() {
            out.push(format!("x({},{})", la, lb));
        }
    }
    out
}

/// Variable index of the pair (a_i, b_j) in `pair_vars(a, b)`.
pub fn pair_index(b_len: usize, ai: usize, bj: usize) -> usize {
    ai * b_len + bj
}

#[derive(Clone, Debug)]
pub struct LetterplaceIdeal {
    pub domain: Arc<Poset>,
    pub codomain: Arc<Poset>,
    /// None means all of Hom(domain, codomain).
    pub selection: Option<HomIdeal>,
    pub ideal: MonomialIdeal,
}

/// The ideal L(Q,P) (or the subideal from a selection of maps) in
/// k[x_{Q x P}]. The selection's ambient must be Hom(Q,P).
pub fn letterplace(
    domain: &Poset,
    codomain: &Poset,
    selection: Option<&HomIdeal>,
) -> Result<LetterplaceIdeal> {
    let vars = pair_vars(domain, codomain);
    let gens: Vec<Monomial> = match selection {
        Some(j) => {
            let amb = &j.ambient;
            if *amb.source != *domain || *amb.target != *codomain || amb.strict {
                return Err(Error::AmbientMismatch(
                    "selection does not live in Hom(domain, codomain)".into(),
                ));
            }
            j.members()
                .iter()
                .map(|&m| graph_monomial(amb.assignments()[m].as_slice(), codomain.len()))
                .collect()
        }
        None => {
            let h = hom_poset(domain, codomain, false)?;
            h.assignments()
                .iter()
                .map(|a| graph_monomial(a, codomain.len()))
                .collect()
        }
    };
    let ideal = MonomialIdeal::new(vars, gens)?;
    Ok(LetterplaceIdeal {
        domain: Arc::new(domain.clone()),
        codomain: Arc::new(codomain.clone()),
        selection: selection.cloned(),
        ideal,
    })
}

fn graph_monomial(assignment: &[usize], codomain_len: usize) -> Monomial {
    Monomial::from_exps(
        assignment
            .iter()
            .enumerate()
            .map(|(q, &p)| (pair_index(codomain_len, q, p), 1))
            .collect(),
    )
}

/// The n'th letterplace ideal L(n,P) in k[x_{[n] x P}].
pub fn letterplace_n(n: usize, p: &Poset) -> Result<LetterplaceIdeal> {
    letterplace(&Poset::chain(n), p, None)
}

/// The n'th co-letterplace ideal L(P,n) in k[x_{P x [n]}].
pub fn coletterplace(p: &Poset, n: usize) -> Result<LetterplaceIdeal> {
    letterplace(p, &Poset::chain(n), None)
}

/// Relabel an ideal over k[x_{A x B}] as an ideal over k[x_{B x A}] by
/// switching pair coordinates (the tau relabeling).
pub fn transpose_pair_ideal(
    ideal: &MonomialIdeal,
    a: &Poset,
    b: &Poset,
) -> Result<MonomialIdeal> {
    if ideal.vars() != pair_vars(a, b).as_slice() {
        return Err(Error::AmbientMismatch(
            "ideal is not over the declared pair ring".into(),
        ));
    }
    let target: Vec<usize> = (0..a.len() * b.len())
        .map(|k| {
            let ai = k / b.len();
            let bj = k % b.len();
            pair_index(a.len(), bj, ai)
        })
        .collect();
    ideal.substitute_indices(&target, pair_vars(b, a))
}

/// Ranks (0-based) of the elements of a total order.
fn chain_ranks(chain: &Poset) -> Result<Vec<usize>> {
    if !chain.is_total_order() {
        return Err(Error::Invalid("codomain must be a chain".into()));
    }
    Ok(chain.extension_rank())
}

/// The set Lambda(phi) = { (p,i) : phi(q) <= i < phi(p) for all q < p } for
/// an isotone map phi : P -> [n]. Values i are 1-based chain positions; for
/// minimal p the condition degenerates to 1 <= i < phi(p).
pub fn lambda_set(phi: &IsotoneMap) -> Result<Vec<(usize, usize)>> {
    let ranks = chain_ranks(&phi.codomain)?;
    let p = &phi.domain;
    let value = |e: usize| ranks[phi.apply(e)] + 1;
    let mut out = Vec::new();
    for e in 0..p.len() {
        let mut lo = 1;
        for q in 0..p.len() {
            if p.less(q, e) {
                lo = lo.max(value(q));
            }
        }
        for i in lo..value(e) {
            out.push((e, i));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// K(S): the ideal generated by the monomials of the Lambda sets of the
/// given maps P -> chain. An empty family gives the zero ideal in the
/// declared ambient. With `transpose` unset the ideal lives in
/// k[x_{P x [n]}]; set, in k[x_{[n] x P}] with coordinates switched.
pub fn k_ideal(
    p: &Poset,
    chain: &Poset,
    maps: &[IsotoneMap],
    transpose: bool,
) -> Result<MonomialIdeal> {
    let n = chain.len();
    chain_ranks(chain)?;
    let ext = chain.linear_extension();
    for m in maps {
        if *m.domain != *p || *m.codomain != *chain {
            return Err(Error::AmbientMismatch(
                "map does not live in Hom(P, chain)".into(),
            ));
        }
    }
    let vars = if transpose {
        pair_vars(chain, p)
    } else {
        pair_vars(p, chain)
    };
    let mut gens = Vec::with_capacity(maps.len());
    for m in maps {
        let lambda = lambda_set(m)?;
        let exps = lambda
            .iter()
            .map(|&(e, i)| {
                let c = ext[i - 1];
                let idx = if transpose {
                    pair_index(p.len(), c, e)
                } else {
                    pair_index(n, e, c)
                };
                (idx, 1)
            })
            .collect();
        gens.push(Monomial::from_exps(exps));
    }
    MonomialIdeal::new(vars, gens)
}

/// Alexander dual of L(J) for a poset ideal J in Hom(P,[n]), computed as
/// L(n,P) + K(J^c) in k[x_{[n] x P}].
pub fn coletterplace_dual(j: &HomIdeal) -> Result<MonomialIdeal> {
    let amb = &j.ambient;
    if amb.strict || j.mode != OrderMode::Full {
        return Err(Error::AmbientMismatch(
            "the dual formula needs a full-order poset ideal of non-strict maps".into(),
        ));
    }
    if !amb.target.is_total_order() {
        return Err(Error::AmbientMismatch("codomain must be a chain".into()));
    }
    let p = amb.source.as_ref();
    let chain = amb.target.as_ref();
    let lnp = letterplace(chain, p, None)?.ideal;
    let maps: Vec<IsotoneMap> = j.complement().iter().map(|&m| amb.map(m)).collect();
    let k = k_ideal(p, chain, &maps, true)?;
    lnp.sum(&k)
}

/// Per-generator data of a linear-quotient certificate for L(J).
#[derive(Clone, Debug)]
pub struct QuotientStep {
    /// Index of the map in the ambient Hom-poset.
    pub map: usize,
    /// Variables generating the colon ideal of this step, as (p, i) pairs
    /// with 1-based chain positions.
    pub colon: Vec<(usize, usize)>,
    /// The Lambda set of the map.
    pub lambda: Vec<(usize, usize)>,
}

/// A verified linear-quotient certificate: the maps of J listed in the
/// admission order `<=^t` (reverse order on the monomials), the colon
/// variables of each step, and the projective dimension they certify.
#[derive(Clone, Debug)]
pub struct LinearQuotientCertificate {
    pub steps: Vec<QuotientStep>,
    /// max |colon| over the steps: the projective dimension of L(J).
    pub pd: usize,
    /// max |Lambda(phi)| over the steps; equals `pd` in full order mode.
    pub pd_lambda: usize,
    pub mode: OrderMode,
}

/// Verify linear quotients for L(J) where J is a poset ideal in Hom(P,[n])
/// (full or weak order).
///
/// The admission order is lexicographic on the value tuple along a fixed
/// linear extension of P, which extends both the pointwise and the weak
/// order. Every colon ideal must be generated by variables contained in the
/// Lambda set of its map; in full order mode the colon variables must be
/// exactly the Lambda set and pd = max |Lambda|. Violations are reported as
/// internal contradictions.
pub fn linear_quotients_certificate(j: &HomIdeal) -> Result<LinearQuotientCertificate> {
    let amb = &j.ambient;
    if amb.strict {
        return Err(Error::AmbientMismatch(
            "certificate needs non-strict maps".into(),
        ));
    }
    let ranks = chain_ranks(&amb.target)?;
    let p = amb.source.as_ref();
    let n = amb.target.len();
    let ext_p = p.linear_extension();
    let mut order: Vec<usize> = j.members().to_vec();
    order.sort_by_key(|&m| {
        ext_p
            .iter()
            .map(|&e| ranks[amb.assignments()[m][e]])
            .collect::<Vec<usize>>()
    });
    let vars = pair_vars(p, &amb.target);
    let chain_ext = amb.target.linear_extension();
    let pair_var = |e: usize, i: usize| pair_index(n, e, chain_ext[i - 1]);

    let mut steps = Vec::with_capacity(order.len());
    let mut pd = 0usize;
    let mut pd_lambda = 0usize;
    let mut prior: Vec<Monomial> = Vec::new();
    for &m in &order {
        let phi = amb.map(m);
        let monomial = graph_monomial(amb.assignments()[m].as_slice(), n);
        let j_phi = MonomialIdeal::new(vars.clone(), prior.clone())?;
        let colon = j_phi.colon(&monomial);
        let lambda = lambda_set(&phi)?;
        let lambda_vars: BTreeSet<usize> = lambda.iter().map(|&(e, i)| pair_var(e, i)).collect();
        let mut colon_pairs = Vec::new();
        for g in colon.gens() {
            if g.degree() != 1 {
                return Err(Error::Bug(format!(
                    "colon of step {} is not generated by variables: {:?}",
                    phi.bracket_label(),
                    colon
                )));
            }
            let v = g.exps()[0].0;
            if !lambda_vars.contains(&v) {
                return Err(Error::Bug(format!(
                    "colon variable {} of step {} lies outside the Lambda set",
                    vars[v],
                    phi.bracket_label()
                )));
            }
            let e = v / n;
            let c = v % n;
            colon_pairs.push((e, amb.target.extension_rank()[c] + 1));
        }
        if j.mode == OrderMode::Full && colon.gens().len() != lambda_vars.len() {
            return Err(Error::Bug(format!(
                "colon of step {} does not exhaust the Lambda set",
                phi.bracket_label()
            )));
        }
        colon_pairs.sort_unstable();
        pd = pd.max(colon_pairs.len());
        pd_lambda = pd_lambda.max(lambda.len());
        steps.push(QuotientStep {
            map: m,
            colon: colon_pairs,
            lambda,
        });
        prior.push(monomial);
    }
    if j.mode == OrderMode::Full && !order.is_empty() && pd != pd_lambda {
        return Err(Error::Bug(
            "projective dimension from colons disagrees with max |Lambda|".into(),
        ));
    }
    Ok(LinearQuotientCertificate {
        steps,
        pd,
        pd_lambda,
        mode: j.mode,
    })
}

/// Outcome of the constructive duality test for a subset F of P x [n].
#[derive(Clone, Debug)]
pub enum DualityWitness {
    /// F contains the graph of this isotone map P -> [n].
    Map(IsotoneMap),
    /// A multichain p_1 <= ... <= p_n with (p_i, i) outside F for all i.
    Counterexample(Vec<usize>),
}

/// Run the filtration construction: given F as a set of (p, i) pairs
/// (1-based i), either find an isotone map psi with graph inside F, or a
/// multichain avoiding F.
pub fn duality_witness(f: &[(usize, usize)], p: &Poset, n: usize) -> Result<DualityWitness> {
    let np = p.len();
    let mut fset = vec![Bits::new(n + 1); np];
    for &(e, i) in f {
        if e >= np || i == 0 || i > n {
            return Err(Error::Invalid(format!("pair ({e},{i}) outside P x [n]")));
        }
        fset[e].insert(i);
    }
    // levels[i] is the poset ideal J_i, J_n = P; gens[i] generates J_{i-1}.
    let mut levels = vec![Bits::new(np); n + 1];
    let mut gens = vec![Bits::new(np); n + 1];
    levels[n] = Bits::full(np);
    for i in (1..=n).rev() {
        let mut g = Bits::new(np);
        for e in levels[i].iter() {
            if !fset[e].contains(i) {
                g.insert(e);
            }
        }
        levels[i - 1] = p.downward_closure(&g);
        gens[i] = g;
    }
    if levels[0].is_empty() {
        let chain = Arc::new(Poset::chain(n));
        let assignment: Vec<usize> = (0..np)
            .map(|e| (1..=n).find(|&i| levels[i].contains(e)).unwrap() - 1)
            .collect();
        let psi = IsotoneMap::new(Arc::new(p.clone()), chain, assignment)?;
        for (e, &v) in psi.assignment().iter().enumerate() {
            if !fset[e].contains(v + 1) {
                return Err(Error::Bug("constructed graph escapes F".into()));
            }
        }
        Ok(DualityWitness::Map(psi))
    } else {
        let mut cur = levels[0].iter().next().unwrap();
        let mut multichain = Vec::with_capacity(n);
        for level_gens in gens.iter().take(n + 1).skip(1) {
            let next = level_gens
                .iter()
                .find(|&q| p.leq(cur, q))
                .ok_or_else(|| Error::Bug("filtration walk found no successor".into()))?;
            multichain.push(next);
            cur = next;
        }
        for (k, &e) in multichain.iter().enumerate() {
            if fset[e].contains(k + 1) {
                return Err(Error::Bug("counterexample multichain meets F".into()));
            }
        }
        Ok(DualityWitness::Counterexample(multichain))
    }
}

/// Does F (pairs over P x [n], 1-based i) intersect the transposed graph of
/// every isotone map [n] -> P?
pub fn is_transversal(f: &[(usize, usize)], p: &Poset, n: usize) -> Result<bool> {
    let h = hom_poset(&Poset::chain(n), p, false)?;
    let fset: BTreeSet<(usize, usize)> = f.iter().copied().collect();
    Ok(h.assignments().iter().all(|a| {
        a.iter()
            .enumerate()
            .any(|(i, &pe)| fset.contains(&(pe, i + 1)))
    }))
}
