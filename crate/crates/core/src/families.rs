//! Derived ideal families: multichain ideals, initial ideals of
//! determinantal and ladder determinantal ideals, the symmetric-matrix
//! case, Ferrers ideals, strongly stable and Murai-shifted ideals,
//! cointerval edge ideals, and uniform face ideals (plain and colored).
//!
//! Every family that arises as a regular quotient is generated twice: once
//! as the image of its source ideal under the named fibered map, and once
//! from the explicit generator description of the family; the two results
//! must agree or construction fails. Families that are subideals L(J)
//! cross-check the Hom-ideal route against the direct listing.

use std::sync::Arc;

use crate::hom::{downset, hom_poset, HomIdeal, HomPoset, OrderMode};
use crate::letterplace::{letterplace, letterplace_n, pair_index, pair_vars, LetterplaceIdeal};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::Poset;
use crate::quotient::{builders, poset_vars, quotient_ideal, FiberedMap};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub enum FamilySpec {
    /// The multichain ideal: image of L(s, P x [m]) in P x [m+s-1].
    Multichain { p: Poset, m: usize, s: usize },
    /// Generators of the squarefree power dual to the multichain ideal.
    SqfreePowerDual { p: Poset, m: usize, s: usize },
    /// Initial ideals of s-minors: image of L(s, [n] x [m]) under the
    /// shifted embedding with offset sequences e, f.
    DetInitial {
        n: usize,
        m: usize,
        s: usize,
        e: Vec<usize>,
        f: Vec<usize>,
    },
    /// Initial ideal of 2-minors of a symmetric (n+1)-matrix.
    Sym2Initial { n: usize },
    /// Ladder determinantal initial ideal over a one-sided ladder (downset)
    /// in [rows] x [cols], cells 1-based.
    LadderInitial {
        rows: usize,
        cols: usize,
        cells: Vec<(usize, usize)>,
    },
    /// Ferrers ideal of a partition.
    Ferrers { lambda: Vec<usize> },
    /// Strongly stable ideal from a poset ideal of Hom([d],[n]); generators
    /// are weakly increasing 1-based value tuples, None meaning all maps.
    StronglyStable {
        d: usize,
        n: usize,
        gens: Option<Vec<Vec<usize>>>,
    },
    /// The stable-operator image for a shift sequence a (a_0 = 0, weakly
    /// increasing, length d).
    MuraiStable {
        d: usize,
        n: usize,
        gens: Option<Vec<Vec<usize>>>,
        shifts: Vec<usize>,
    },
    /// Edge ideal of a cointerval d-hypergraph: weak-order poset ideal in
    /// Hom([d],[n]) pushed through (a,b) -> a+b-1.
    Cointerval {
        d: usize,
        n: usize,
        gens: Option<Vec<Vec<usize>>>,
    },
    /// Uniform face ideal of a simplicial complex on n vertices (faces as
    /// 1-based vertex lists, closed under subsets).
    UniformFace { n: usize, faces: Vec<Vec<usize>> },
    /// Cook's colored uniform face ideal: color class sizes and a nested
    /// complex on vertices (color, position), both 1-based.
    ColoredFace {
        sizes: Vec<usize>,
        faces: Vec<Vec<(usize, usize)>>,
    },
}

#[derive(Clone, Debug)]
pub struct FamilyOutput {
    pub name: &'static str,
    pub source: LetterplaceIdeal,
    pub map: Option<FiberedMap>,
    pub ideal: MonomialIdeal,
}

/// Build a family instance, generating the result twice and insisting the
/// two routes agree.
pub fn family(spec: &FamilySpec) -> Result<FamilyOutput> {
    match spec {
        FamilySpec::Multichain { p, m, s } => multichain(p, *m, *s),
        FamilySpec::SqfreePowerDual { p, m, s } => sqfree_power_dual_output(p, *m, *s),
        FamilySpec::DetInitial { n, m, s, e, f } => det_initial(*n, *m, *s, e, f),
        FamilySpec::Sym2Initial { n } => sym2_initial(*n),
        FamilySpec::LadderInitial { rows, cols, cells } => ladder_initial(*rows, *cols, cells),
        FamilySpec::Ferrers { lambda } => ferrers(lambda),
        FamilySpec::StronglyStable { d, n, gens } => strongly_stable(*d, *n, gens.as_deref()),
        FamilySpec::MuraiStable { d, n, gens, shifts } => {
            murai_stable(*d, *n, gens.as_deref(), shifts)
        }
        FamilySpec::Cointerval { d, n, gens } => cointerval(*d, *n, gens.as_deref()),
        FamilySpec::UniformFace { n, faces } => uniform_face(*n, faces),
        FamilySpec::ColoredFace { sizes, faces } => colored_face(sizes, faces),
    }
}

fn check_agreement(
    name: &'static str,
    from_map: &MonomialIdeal,
    direct: &MonomialIdeal,
) -> Result<()> {
    if from_map != direct {
        return Err(Error::Bug(format!(
            "{name}: map route and direct description disagree:\n  map:    {from_map:?}\n  direct: {direct:?}"
        )));
    }
    Ok(())
}

/// Strictly increasing s-subsets of 1..=bound, lexicographic.
fn strict_tuples(bound: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn go(start: usize, bound: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..=bound {
            cur.push(v);
            go(v + 1, bound, s, cur, out);
            cur.pop();
        }
    }
    go(1, bound, s, &mut cur, &mut out);
    out
}

fn multichain(p: &Poset, m: usize, s: usize) -> Result<FamilyOutput> {
    if m < 1 || s < 1 {
        return Err(Error::Invalid("multichain needs m, s >= 1".into()));
    }
    let pm = Poset::product(p, &Poset::chain(m));
    let source = letterplace_n(s, &pm)?;
    let map = builders::multichain(p, m, s)?;
    let image = quotient_ideal(&source.ideal, &map)?;

    // Direct description: weakly increasing p-sequences paired with strictly
    // increasing position sequences, independently.
    let cols = m + s - 1;
    let vars = poset_vars(&map.target);
    let chains = hom_poset(&Poset::chain(s), p, false)?;
    let mut gens = Vec::new();
    for pc in chains.assignments() {
        for t in strict_tuples(cols, s) {
            let exps = (0..s)
                .map(|i| (pc[i] * cols + (t[i] - 1), 1))
                .collect();
            gens.push(Monomial::from_exps(exps));
        }
    }
    let direct = MonomialIdeal::new(vars, gens)?;
    check_agreement("multichain", &image, &direct)?;
    Ok(FamilyOutput {
        name: "multichain",
        source,
        map: Some(map),
        ideal: image,
    })
}

/// Generators of the squarefree power ideal dual to the multichain ideal:
/// one strictly increasing m-tuple in [m+s-1] per element of P, weakly
/// increasing along the poset order, componentwise.
pub fn sqfree_power_dual(p: &Poset, m: usize, s: usize) -> Result<MonomialIdeal> {
    if m < 1 || s < 1 {
        return Err(Error::Invalid("squarefree power needs m, s >= 1".into()));
    }
    let cols = m + s - 1;
    // Strict m-tuples in [cols] under componentwise order form the poset of
    // strict isotone maps [m] -> [cols]; the generators are Hom(P, that).
    let tuple_poset = hom_poset(&Poset::chain(m), &Poset::chain(cols), true)?.as_poset();
    let tuples = strict_tuples(cols, m);
    let rows = hom_poset(p, &tuple_poset, false)?;
    let target = Poset::product(p, &Poset::chain(cols));
    let vars = poset_vars(&target);
    let mut gens = Vec::new();
    for a in rows.assignments() {
        let mut exps = Vec::new();
        for (pe, &ti) in a.iter().enumerate() {
            for &t in &tuples[ti] {
                exps.push((pe * cols + (t - 1), 1));
            }
        }
        gens.push(Monomial::from_exps(exps));
    }
    MonomialIdeal::new(vars, gens)
}

fn sqfree_power_dual_output(p: &Poset, m: usize, s: usize) -> Result<FamilyOutput> {
    let ideal = sqfree_power_dual(p, m, s)?;
    let pm = Poset::product(p, &Poset::chain(m));
    let source = letterplace_n(s, &pm)?;
    Ok(FamilyOutput {
        name: "sqfree_power_dual",
        source,
        map: None,
        ideal,
    })
}

fn det_initial(n: usize, m: usize, s: usize, e: &[usize], f: &[usize]) -> Result<FamilyOutput> {
    if e.len() != s || f.len() != s {
        return Err(Error::Invalid(
            "shift sequences must have length s".into(),
        ));
    }
    let grid = Poset::product(&Poset::chain(n), &Poset::chain(m));
    let source = letterplace_n(s, &grid)?;
    let map = builders::det_shift(n, m, e, f)?;
    let image = quotient_ideal(&source.ideal, &map)?;

    // The three bullet specializations have closed generator descriptions.
    let iota: Vec<usize> = (0..s).collect();
    let zeros = vec![0usize; s];
    let rows = n + e[s - 1];
    let cols = m + f[s - 1];
    let direct = if e == zeros.as_slice() && f == iota.as_slice() {
        Some(seq_pair_ideal(rows, cols, s, false, true)?)
    } else if e == iota.as_slice() && f == zeros.as_slice() {
        Some(seq_pair_ideal(rows, cols, s, true, false)?)
    } else if e == iota.as_slice() && f == iota.as_slice() {
        Some(seq_pair_ideal(rows, cols, s, true, true)?)
    } else {
        None
    };
    if let Some(direct) = direct {
        check_agreement("det_initial", &image, &direct)?;
    }
    Ok(FamilyOutput {
        name: "det_initial",
        source,
        map: Some(map),
        ideal: image,
    })
}

/// Products x_{(a_1,b_1)} ... x_{(a_s,b_s)} in [rows] x [cols] where the a's
/// and b's are independently strictly increasing / weakly increasing.
fn seq_pair_ideal(
    rows: usize,
    cols: usize,
    s: usize,
    rows_strict: bool,
    cols_strict: bool,
) -> Result<MonomialIdeal> {
    let grid = Poset::product(&Poset::chain(rows), &Poset::chain(cols));
    let vars = poset_vars(&grid);
    let row_seqs: Vec<Vec<usize>> = if rows_strict {
        strict_tuples(rows, s)
    } else {
        hom_poset(&Poset::chain(s), &Poset::chain(rows), false)?
            .assignments()
            .iter()
            .map(|a| a.iter().map(|&v| v + 1).collect())
            .collect()
    };
    let col_seqs: Vec<Vec<usize>> = if cols_strict {
        strict_tuples(cols, s)
    } else {
        hom_poset(&Poset::chain(s), &Poset::chain(cols), false)?
            .assignments()
            .iter()
            .map(|a| a.iter().map(|&v| v + 1).collect())
            .collect()
    };
    let mut gens = Vec::new();
    for a in &row_seqs {
        for b in &col_seqs {
            let exps = (0..s).map(|i| ((a[i] - 1) * cols + (b[i] - 1), 1)).collect();
            gens.push(Monomial::from_exps(exps));
        }
    }
    MonomialIdeal::new(vars, gens)
}

fn sym2_initial(n: usize) -> Result<FamilyOutput> {
    if n < 1 {
        return Err(Error::Invalid("symmetric case needs n >= 1".into()));
    }
    // P = Hom([2],[n]): pairs i1 <= i2 under componentwise order.
    let p = hom_poset(&Poset::chain(2), &Poset::chain(n), false)?;
    let p_poset = p.as_poset();
    let t = hom_poset(&Poset::chain(2), &Poset::chain(n + 1), false)?;
    let t_poset = t.as_poset();
    let source = letterplace(&Poset::chain(2), &p_poset, None)?;
    // (1,(i1,i2)) -> (i1,i2); (2,(i1,i2)) -> (i1+1, i2+1)
    let mut assignment = Vec::with_capacity(2 * p.len());
    for shift in 0..2 {
        for a in p.assignments() {
            let image: Vec<usize> = a.iter().map(|&v| v + shift).collect();
            let idx = t
                .find(&image)
                .ok_or_else(|| Error::Bug("shifted pair escapes Hom([2],[n+1])".into()))?;
            assignment.push(idx);
        }
    }
    let map = FiberedMap::new(&Poset::chain(2), &p_poset, &t_poset, assignment)?;
    let image = quotient_ideal(&source.ideal, &map)?;

    // x_{(i1,i2)} x_{(j1,j2)} with i1 < j1 and i2 < j2.
    let vars = poset_vars(&t_poset);
    let mut gens = Vec::new();
    for (ia, a) in t.assignments().iter().enumerate() {
        for (ib, b) in t.assignments().iter().enumerate() {
            if a[0] < b[0] && a[1] < b[1] {
                gens.push(Monomial::from_exps(vec![(ia, 1), (ib, 1)]));
            }
        }
    }
    let direct = MonomialIdeal::new(vars, gens)?;
    check_agreement("sym2_initial", &image, &direct)?;
    Ok(FamilyOutput {
        name: "sym2_initial",
        source,
        map: Some(map),
        ideal: image,
    })
}

/// The triangular ladder { (a,b) : a+b <= n+1 } in [n] x [n].
pub fn triangular_ladder(n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a + b <= n + 1 {
                cells.push((a, b));
            }
        }
    }
    cells
}

fn ladder_initial(rows: usize, cols: usize, cells: &[(usize, usize)]) -> Result<FamilyOutput> {
    if cells.is_empty() {
        return Err(Error::Invalid("ladder needs at least one cell".into()));
    }
    let mut sorted = cells.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &(a, b) in &sorted {
        if a == 0 || b == 0 || a > rows || b > cols {
            return Err(Error::Invalid(format!(
                "cell ({a},{b}) outside [{rows}] x [{cols}]"
            )));
        }
        for (u, v) in [(a.wrapping_sub(1), b), (a, b.wrapping_sub(1))] {
            if u >= 1 && v >= 1 && !sorted.contains(&(u, v)) {
                return Err(Error::Invalid(format!(
                    "ladder is not a poset ideal: ({a},{b}) present but ({u},{v}) missing"
                )));
            }
        }
    }
    // the ladder as a poset in its own right
    let labels: Vec<String> = sorted.iter().map(|&(a, b)| format!("({a},{b})")).collect();
    let ladder = Poset::from_leq(labels, |i, j| {
        sorted[i].0 <= sorted[j].0 && sorted[i].1 <= sorted[j].1
    })?;
    let source = letterplace_n(2, &ladder)?;
    let target = Poset::product(&Poset::chain(rows + 1), &Poset::chain(cols + 1));
    // (1,(a,b)) -> (a,b); (2,(a,b)) -> (a+1,b+1)
    let mut assignment = Vec::with_capacity(2 * sorted.len());
    for shift in 0..2 {
        for &(a, b) in &sorted {
            assignment.push((a - 1 + shift) * (cols + 1) + (b - 1 + shift));
        }
    }
    let map = FiberedMap::new(&Poset::chain(2), &ladder, &target, assignment)?;
    let image = quotient_ideal(&source.ideal, &map)?;

    // x_{(u,v)} x_{(w,z)} with u < w, v < z and (w-1, z-1) in the ladder.
    let vars = poset_vars(&target);
    let mut gens = Vec::new();
    for u in 1..=rows + 1 {
        for v in 1..=cols + 1 {
            for w in u + 1..=rows + 1 {
                for z in v + 1..=cols + 1 {
                    if sorted.contains(&(w - 1, z - 1)) {
                        gens.push(Monomial::from_exps(vec![
                            ((u - 1) * (cols + 1) + (v - 1), 1),
                            ((w - 1) * (cols + 1) + (z - 1), 1),
                        ]));
                    }
                }
            }
        }
    }
    let direct = MonomialIdeal::new(vars, gens)?;
    check_agreement("ladder_initial", &image, &direct)?;
    Ok(FamilyOutput {
        name: "ladder_initial",
        source,
        map: Some(map),
        ideal: image,
    })
}

fn ferrers(lambda: &[usize]) -> Result<FamilyOutput> {
    if lambda.is_empty() || lambda[0] == 0 {
        return Err(Error::Invalid("partition must have a positive part".into()));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invalid("partition must be weakly decreasing".into()));
    }
    let n = lambda.len().max(lambda[0]);
    let two = Poset::antichain(2);
    let chain = Poset::chain(n);
    let amb = Arc::new(hom_poset(&two, &chain, false)?);
    let mut members = Vec::new();
    for (i, &li) in lambda.iter().enumerate() {
        for j in 1..=li {
            members.push(
                amb.find(&[i, j - 1])
                    .ok_or_else(|| Error::Bug("cell escapes Hom(2-antichain,[n])".into()))?,
            );
        }
    }
    let j = downset(Arc::clone(&amb), &members, OrderMode::Full)?;
    if j.len() != members.len() {
        return Err(Error::Bug("Ferrers cells do not form a downset".into()));
    }
    let source = letterplace(&two, &chain, Some(&j))?;

    let vars = pair_vars(&two, &chain);
    let mut gens = Vec::new();
    for (i, &li) in lambda.iter().enumerate() {
        for jj in 1..=li {
            gens.push(Monomial::from_exps(vec![
                (pair_index(n, 0, i), 1),
                (pair_index(n, 1, jj - 1), 1),
            ]));
        }
    }
    let direct = MonomialIdeal::new(vars, gens)?;
    check_agreement("ferrers", &source.ideal, &direct)?;
    Ok(FamilyOutput {
        name: "ferrers",
        ideal: source.ideal.clone(),
        source,
        map: None,
    })
}

/// Poset ideal of Hom([d],[n]) from 1-based weakly increasing value tuples
/// (None = the full Hom-poset), under the given order mode.
fn chain_hom_ideal(
    d: usize,
    n: usize,
    gens: Option<&[Vec<usize>]>,
    mode: OrderMode,
) -> Result<HomIdeal> {
    let amb = Arc::new(hom_poset(&Poset::chain(d), &Poset::chain(n), false)?);
    match gens {
        None => Ok(HomIdeal::all(amb)),
        Some(list) => {
            let mut idx = Vec::with_capacity(list.len());
            for tuple in list {
                if tuple.len() != d {
                    return Err(Error::Invalid(format!(
                        "generator {tuple:?} does not have length {d}"
                    )));
                }
                let a: Vec<usize> = tuple
                    .iter()
                    .map(|&v| {
                        if v == 0 || v > n {
                            Err(Error::Invalid(format!("value {v} outside [{n}]")))
                        } else {
                            Ok(v - 1)
                        }
                    })
                    .collect::<Result<_>>()?;
                let m = amb.find(&a).ok_or_else(|| {
                    Error::Invalid(format!("{tuple:?} is not weakly increasing"))
                })?;
                idx.push(m);
            }
            downset(amb, &idx, mode)
        }
    }
}

fn strongly_stable(d: usize, n: usize, gens: Option<&[Vec<usize>]>) -> Result<FamilyOutput> {
    let j = chain_hom_ideal(d, n, gens, OrderMode::Full)?;
    let source = letterplace(&Poset::chain(d), &Poset::chain(n), Some(&j))?;
    let map = builders::projection(&Poset::chain(d), &Poset::chain(n), 2)?;
    let image = quotient_ideal(&source.ideal, &map)?;
    let direct = borel_ideal(&j)?;
    check_agreement("strongly_stable", &image, &direct)?;
    Ok(FamilyOutput {
        name: "strongly_stable",
        source,
        map: Some(map),
        ideal: image,
    })
}

/// The monomial ideal prod x_{phi(i)} in k[x_1..x_n] attached to a poset
/// ideal of Hom([d],[n]).
pub fn borel_ideal(j: &HomIdeal) -> Result<MonomialIdeal> {
    let amb = &j.ambient;
    if !amb.source.is_total_order() || !amb.target.is_total_order() {
        return Err(Error::AmbientMismatch("ambient must be Hom([d],[n])".into()));
    }
    let vars = poset_vars(&amb.target);
    let gens = j
        .members()
        .iter()
        .map(|&m| {
            Monomial::from_exps(
                amb.assignments()[m]
                    .iter()
                    .map(|&v| (v, 1))
                    .collect(),
            )
        })
        .collect();
    MonomialIdeal::new(vars, gens)
}

/// Recover the poset ideal of Hom([d],[n]) from a strongly stable ideal
/// generated in a single degree d. Rejects input that is not strongly
/// stable, reporting a violating Borel move.
pub fn borel_to_hom_ideal(ideal: &MonomialIdeal, d: usize) -> Result<HomIdeal> {
    let n = ideal.nvars();
    let amb = Arc::new(hom_poset(&Poset::chain(d), &Poset::chain(n), false)?);
    let mut members = Vec::new();
    for g in ideal.gens() {
        if g.degree() != d as u64 {
            return Err(Error::Invalid(format!(
                "generator of degree {} in a degree-{d} family",
                g.degree()
            )));
        }
        let mut tuple = Vec::with_capacity(d);
        for &(v, e) in g.exps() {
            for _ in 0..e {
                tuple.push(v);
            }
        }
        let m = amb
            .find(&tuple)
            .ok_or_else(|| Error::Bug("sorted exponent tuple is weakly increasing".into()))?;
        members.push(m);
    }
    // strong stability: every Borel move x_i * m / x_j (i < j) stays inside
    for g in ideal.gens() {
        for &(vj, _) in g.exps() {
            for vi in 0..vj {
                let moved = g
                    .div_saturating(&Monomial::var(vj))
                    .mul(&Monomial::var(vi));
                if !ideal.gens().contains(&moved) {
                    return Err(Error::Invalid(format!(
                        "not strongly stable: the move {} -> {} escapes the generators",
                        ideal.vars()[vj],
                        ideal.vars()[vi]
                    )));
                }
            }
        }
    }
    let j = downset(Arc::clone(&amb), &members, OrderMode::Full)?;
    if j.len() != members.len() {
        return Err(Error::Bug(
            "strongly stable generators must already be a downset".into(),
        ));
    }
    Ok(j)
}

fn murai_stable(
    d: usize,
    n: usize,
    gens: Option<&[Vec<usize>]>,
    shifts: &[usize],
) -> Result<FamilyOutput> {
    if shifts.len() != d {
        return Err(Error::Invalid("shift sequence must have length d".into()));
    }
    if shifts[0] != 0 {
        return Err(Error::Invalid("shift sequence must start at 0".into()));
    }
    if shifts.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Invalid("shift sequence must be weakly increasing".into()));
    }
    let j = chain_hom_ideal(d, n, gens, OrderMode::Full)?;
    let source = letterplace(&Poset::chain(d), &Poset::chain(n), Some(&j))?;
    let target = Poset::chain(n + shifts[d - 1]);
    let assignment: Vec<usize> = (0..d * n).map(|k| (k % n) + shifts[k / n]).collect();
    let map = FiberedMap::new(&Poset::chain(d), &Poset::chain(n), &target, assignment)?;
    let image = quotient_ideal(&source.ideal, &map)?;

    let vars = poset_vars(&target);
    let amb = &j.ambient;
    let direct_gens = j
        .members()
        .iter()
        .map(|&m| {
            Monomial::from_exps(
                amb.assignments()[m]
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v + shifts[i], 1))
                    .collect(),
            )
        })
        .collect();
    let direct = MonomialIdeal::new(vars, direct_gens)?;
    check_agreement("murai_stable", &image, &direct)?;
    Ok(FamilyOutput {
        name: "murai_stable",
        source,
        map: Some(map),
        ideal: image,
    })
}

fn cointerval(d: usize, n: usize, gens: Option<&[Vec<usize>]>) -> Result<FamilyOutput> {
    // weak order distinguished at the top element d of [d]
    let j = chain_hom_ideal(d, n, gens, OrderMode::Weak(d - 1))?;
    let source = letterplace(&Poset::chain(d), &Poset::chain(n), Some(&j))?;
    let target = Poset::chain(d + n - 1);
    let assignment: Vec<usize> = (0..d * n).map(|k| (k % n) + k / n).collect();
    let map = FiberedMap::new(&Poset::chain(d), &Poset::chain(n), &target, assignment)?;
    let image = quotient_ideal(&source.ideal, &map)?;

    // edges of the cointerval hypergraph: the strict transforms phi(i)+i-1
    let vars = poset_vars(&target);
    let amb = &j.ambient;
    let direct_gens = j
        .members()
        .iter()
        .map(|&m| {
            Monomial::from_exps(
                amb.assignments()[m]
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v + i, 1))
                    .collect(),
            )
        })
        .collect();
    let direct = MonomialIdeal::new(vars, direct_gens)?;
    check_agreement("cointerval", &image, &direct)?;
    for g in direct.gens() {
        if !g.is_squarefree() {
            return Err(Error::Bug("cointerval edges must be squarefree".into()));
        }
    }
    Ok(FamilyOutput {
        name: "cointerval",
        source,
        map: Some(map),
        ideal: image,
    })
}

fn validate_complex(n: usize, faces: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut sorted: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            f
        })
        .collect();
    sorted.sort();
    sorted.dedup();
    for f in &sorted {
        for &v in f {
            if v == 0 || v > n {
                return Err(Error::Invalid(format!("vertex {v} outside 1..={n}")));
            }
        }
        for k in 0..f.len() {
            let mut sub = f.clone();
            sub.remove(k);
            if !sorted.contains(&sub) {
                return Err(Error::Invalid(format!(
                    "complex is not closed under subsets: {sub:?} missing below {f:?}"
                )));
            }
        }
    }
    Ok(sorted)
}

fn uniform_face(n: usize, faces: &[Vec<usize>]) -> Result<FamilyOutput> {
    if faces.is_empty() {
        return Err(Error::Invalid("complex must contain at least the empty face".into()));
    }
    let faces = validate_complex(n, faces)?;
    let verts = Poset::antichain(n);
    let two = Poset::chain(2);
    let amb = Arc::new(hom_poset(&verts, &two, false)?);
    let mut members = Vec::new();
    for f in &faces {
        let a: Vec<usize> = (1..=n).map(|v| usize::from(f.contains(&v))).collect();
        members.push(
            amb.find(&a)
                .ok_or_else(|| Error::Bug("face map escapes Hom(antichain,[2])".into()))?,
        );
    }
    let j = downset(Arc::clone(&amb), &members, OrderMode::Full)?;
    if j.len() != members.len() {
        return Err(Error::Bug("subset-closed complex must give a downset".into()));
    }
    let source = letterplace(&verts, &two, Some(&j))?;

    // prod_{v in F} x_{(v,2)} * prod_{v not in F} x_{(v,1)}
    let vars = pair_vars(&verts, &two);
    let gens = faces
        .iter()
        .map(|f| {
            Monomial::from_exps(
                (1..=n)
                    .map(|v| (pair_index(2, v - 1, usize::from(f.contains(&v))), 1))
                    .collect(),
            )
        })
        .collect();
    let direct = MonomialIdeal::new(vars, gens)?;
    check_agreement("uniform_face", &source.ideal, &direct)?;
    Ok(FamilyOutput {
        name: "uniform_face",
        ideal: source.ideal.clone(),
        source,
        map: None,
    })
}

fn colored_face(sizes: &[usize], faces: &[Vec<(usize, usize)>]) -> Result<FamilyOutput> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Invalid("color class sizes must be positive".into()));
    }
    let k = sizes.len();
    let mut sorted: Vec<Vec<(usize, usize)>> = faces
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            f
        })
        .collect();
    sorted.sort();
    sorted.dedup();
    if sorted.is_empty() {
        return Err(Error::Invalid("complex must contain at least the empty face".into()));
    }
    for f in &sorted {
        for &(c, p) in f {
            if c == 0 || c > k || p == 0 || p > sizes[c - 1] {
                return Err(Error::Invalid(format!(
                    "vertex ({c},{p}) outside the color classes"
                )));
            }
        }
        for idx in 0..f.len() {
            let mut sub = f.clone();
            sub.remove(idx);
            if !sorted.contains(&sub) {
                return Err(Error::Invalid(format!(
                    "complex is not closed under subsets: {sub:?} missing below {f:?}"
                )));
            }
        }
        // nested: swapping a vertex for a smaller one of the same color stays
        for (idx, &(c, p)) in f.iter().enumerate() {
            for q in 1..p {
                if f.contains(&(c, q)) {
                    continue;
                }
                let mut swapped = f.clone();
                swapped[idx] = (c, q);
                swapped.sort_unstable();
                if !sorted.contains(&swapped) {
                    return Err(Error::Invalid(format!(
                        "complex is not nested: swapping ({c},{p}) down to ({c},{q}) in {f:?} leaves it"
                    )));
                }
            }
        }
    }
    // P = disjoint union of the color chains; J from threshold tuples.
    let chains: Vec<Poset> = sizes.iter().map(|&c| Poset::chain(c)).collect();
    let chain_refs: Vec<&Poset> = chains.iter().collect();
    let p = Poset::disjoint_union(&chain_refs);
    let two = Poset::chain(2);
    let amb = Arc::new(hom_poset(&p, &two, false)?);
    let offset: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &c| {
            let o = *acc;
            *acc += c;
            Some(o)
        })
        .collect();
    let mut members = Vec::new();
    for f in &sorted {
        // threshold per color: the bottom c_i - |F cap C_i| vertices map to 1
        let mut assignment = vec![0usize; p.len()];
        for (ci, &c) in sizes.iter().enumerate() {
            let count = f.iter().filter(|&&(fc, _)| fc == ci + 1).count();
            for pos in 0..c {
                assignment[offset[ci] + pos] = usize::from(pos >= c - count);
            }
        }
        members.push(
            amb.find(&assignment)
                .ok_or_else(|| Error::Bug("threshold map escapes Hom(P,[2])".into()))?,
        );
    }
    members.sort_unstable();
    members.dedup();
    let j = downset(Arc::clone(&amb), &members, OrderMode::Full)?;
    if j.len() != members.len() {
        return Err(Error::Bug(
            "count tuples of a subset-closed complex must form a downset".into(),
        ));
    }
    let source = letterplace(&p, &two, Some(&j))?;
    // union of the projections [c_i] x [2] -> [2], one target copy per color
    let twos: Vec<Poset> = (0..k).map(|_| Poset::chain(2)).collect();
    let two_refs: Vec<&Poset> = twos.iter().collect();
    let target = Poset::disjoint_union(&two_refs);
    let mut assignment = Vec::with_capacity(p.len() * 2);
    for v in 0..p.len() {
        let color = offset
            .iter()
            .rposition(|&o| o <= v)
            .expect("offset 0 exists");
        for a in 0..2 {
            assignment.push(color * 2 + a);
        }
    }
    let map = FiberedMap::new(&p, &two, &target, assignment)?;
    let image = quotient_ideal(&source.ideal, &map)?;

    // mu(F) = prod_i X_i^{|F cap C_i|} Y_i^{c_i - |F cap C_i|}
    let vars = poset_vars(&target);
    let gens = sorted
        .iter()
        .map(|f| {
            let mut exps = Vec::new();
            for (ci, &c) in sizes.iter().enumerate() {
                let count = f.iter().filter(|&&(fc, _)| fc == ci + 1).count() as u64;
                exps.push((ci * 2 + 1, count));
                exps.push((ci * 2, c as u64 - count));
            }
            Monomial::from_exps(exps)
        })
        .collect();
    let direct = MonomialIdeal::new(vars, gens)?;
    check_agreement("colored_face", &image, &direct)?;
    Ok(FamilyOutput {
        name: "colored_face",
        source,
        map: Some(map),
        ideal: image,
    })
}

/// The ambient Hom-poset of a chain-to-chain family, for reuse in tests.
pub fn chain_hom(d: usize, n: usize) -> Result<HomPoset> {
    hom_poset(&Poset::chain(d), &Poset::chain(n), false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multichain_example() {
        let out = family(&FamilySpec::Multichain {
            p: Poset::chain(2),
            m: 1,
            s: 2,
        })
        .unwrap();
        assert_eq!(
            out.ideal.render_gens(),
            vec![
                "x(1,1)*x(1,2)".to_string(),
                "x(1,1)*x(2,2)".to_string(),
                "x(2,1)*x(2,2)".to_string()
            ]
        );
    }

    #[test]
    fn sqfree_power_dual_examples() {
        let i = sqfree_power_dual(&Poset::chain(1), 1, 2).unwrap();
        assert_eq!(i.render_gens(), vec!["x(1,1)", "x(1,2)"]);
        let i = sqfree_power_dual(&Poset::antichain(2), 2, 1).unwrap();
        assert_eq!(i.gens().len(), 1);
        assert_eq!(i.gens()[0].degree(), 4);
    }

    #[test]
    fn sqfree_power_dual_is_dual_of_multichain() {
        use crate::monomial::alexander_dual_checked;
        for (p, m, s) in [
            (Poset::chain(2), 1usize, 2usize),
            (Poset::chain(2), 2, 2),
            (crate::poset::named_poset("v").unwrap(), 1, 2),
        ] {
            let mc = family(&FamilySpec::Multichain { p: p.clone(), m, s }).unwrap();
            let dual = alexander_dual_checked(&mc.ideal).unwrap();
            let direct = sqfree_power_dual(&p, m, s).unwrap();
            assert_eq!(dual, direct);
        }
    }

    #[test]
    fn det_initial_strict_case() {
        let out = family(&FamilySpec::DetInitial {
            n: 2,
            m: 2,
            s: 2,
            e: vec![0, 1],
            f: vec![0, 1],
        })
        .unwrap();
        // 3x3 matrix, strict pairs: 9 generators
        assert_eq!(out.ideal.gens().len(), 9);
        assert!(out.ideal.is_squarefree());
    }

    #[test]
    fn ferrers_example() {
        let out = family(&FamilySpec::Ferrers { lambda: vec![2, 1] }).unwrap();
        assert_eq!(
            out.ideal.render_gens(),
            vec!["x(1,1)*x(2,1)", "x(1,1)*x(2,2)", "x(1,2)*x(2,1)"]
        );
        assert!(family(&FamilySpec::Ferrers { lambda: vec![1, 2] }).is_err());
    }

    #[test]
    fn strongly_stable_examples() {
        let out = family(&FamilySpec::StronglyStable {
            d: 2,
            n: 2,
            gens: Some(vec![vec![1, 2]]),
        })
        .unwrap();
        assert_eq!(out.ideal.render_gens(), vec!["x1^2", "x1*x2"]);
        let out = family(&FamilySpec::StronglyStable {
            d: 2,
            n: 2,
            gens: None,
        })
        .unwrap();
        assert_eq!(out.ideal.render_gens(), vec!["x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn borel_bridge_round_trip() {
        let j = chain_hom_ideal(2, 3, Some(&[vec![1, 3], vec![2, 2]]), OrderMode::Full).unwrap();
        let ideal = borel_ideal(&j).unwrap();
        let back = borel_to_hom_ideal(&ideal, 2).unwrap();
        assert_eq!(back.members(), j.members());
        // (x1^2, x2^2) is not strongly stable: x1*x2 is missing
        let bad = MonomialIdeal::from_text("vars: x1 x2\nx1^2\nx2^2\n").unwrap();
        assert!(matches!(
            borel_to_hom_ideal(&bad, 2),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn murai_stable_example() {
        let out = family(&FamilySpec::MuraiStable {
            d: 2,
            n: 2,
            gens: Some(vec![vec![1, 2]]),
            shifts: vec![0, 1],
        })
        .unwrap();
        assert_eq!(out.ideal.render_gens(), vec!["x1*x2", "x1*x3"]);
        assert!(out.ideal.is_squarefree());
    }

    #[test]
    fn cointerval_weak_downset() {
        // weak-order ideal generated by (1,2) in Hom([2],[2]) is a singleton;
        // its edge ideal is a single squarefree edge.
        let out = family(&FamilySpec::Cointerval {
            d: 2,
            n: 2,
            gens: Some(vec![vec![1, 2]]),
        })
        .unwrap();
        assert_eq!(out.ideal.render_gens(), vec!["x1*x3"]);
    }

    #[test]
    fn uniform_face_example() {
        let out = family(&FamilySpec::UniformFace {
            n: 2,
            faces: vec![vec![], vec![1], vec![2]],
        })
        .unwrap();
        let gens = out.ideal.render_gens();
        assert_eq!(gens.len(), 3);
        assert!(gens.contains(&"x(1,1)*x(2,1)".to_string())); // y1 y2
        assert!(gens.contains(&"x(1,2)*x(2,1)".to_string())); // x1 y2
        assert!(gens.contains(&"x(1,1)*x(2,2)".to_string())); // y1 x2
        // not subset-closed
        assert!(family(&FamilySpec::UniformFace {
            n: 2,
            faces: vec![vec![], vec![1, 2]],
        })
        .is_err());
    }

    #[test]
    fn colored_face_example() {
        // two color classes of sizes (2,1); nested complex on them
        let out = family(&FamilySpec::ColoredFace {
            sizes: vec![2, 1],
            faces: vec![vec![], vec![(1, 1)], vec![(2, 1)], vec![(1, 1), (2, 1)]],
        })
        .unwrap();
        assert_eq!(out.ideal.gens().len(), 4);
        // non-nested complex: {(1,2)} without {(1,1)}
        assert!(family(&FamilySpec::ColoredFace {
            sizes: vec![2, 1],
            faces: vec![vec![], vec![(1, 2)]],
        })
        .is_err());
    }

    #[test]
    fn ladder_triangular_preset() {
        let cells = triangular_ladder(2);
        assert_eq!(cells, vec![(1, 1), (1, 2), (2, 1)]);
        let out = family(&FamilySpec::LadderInitial {
            rows: 2,
            cols: 2,
            cells,
        })
        .unwrap();
        assert!(out.ideal.is_squarefree());
        // not a downset
        assert!(family(&FamilySpec::LadderInitial {
            rows: 2,
            cols: 2,
            cells: vec![(2, 2)],
        })
        .is_err());
    }

    #[test]
    fn sym2_small() {
        let out = family(&FamilySpec::Sym2Initial { n: 2 }).unwrap();
        // pairs (i1,i2) < (j1,j2) strictly in both coordinates within the
        // triangle of [3]: generators of the symmetric initial ideal
        assert!(out.ideal.is_squarefree());
        assert!(out.map.is_some());
    }
}
