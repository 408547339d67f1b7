//! Exact graded Betti tables, Hilbert-series numerators, and derived ring
//! properties.
//!
//! Betti numbers of S/I are computed multidegree by multidegree: the
//! candidate multidegrees are the joins of generator exponent vectors, and
//! at each multidegree the homology of the Koszul complex restricted to that
//! degree reduces to the simplicial complex generated by the complements
//! supp(sigma - g) over generators g dividing sigma. Ranks of the boundary
//! maps are taken over an exact field: the rationals by default, or a prime
//! field selected by the characteristic option.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::bits::Bits;
use crate::monomial::{alexander_dual_checked, Monomial, MonomialIdeal};
use crate::rank::{is_prime, rank_gf, rank_q, SparseRow};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct BettiOptions {
    /// 0 for the rationals, otherwise a prime < 2^31.
    pub characteristic: u64,
    /// Cap on the number of candidate multidegrees.
    pub max_multidegrees: usize,
    /// Cap on the number of faces of a single restricted complex.
    pub max_faces: usize,
    /// Cap on the dimension of a single boundary matrix.
    pub max_matrix: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            characteristic: 0,
            max_multidegrees: 60_000,
            max_faces: 100_000,
            max_matrix: 2_000,
        }
    }
}

impl BettiOptions {
    pub fn with_characteristic(characteristic: u64) -> Self {
        BettiOptions {
            characteristic,
            ..Default::default()
        }
    }
}

/// Graded Betti numbers beta_{i,j}(S/I) with exact integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
    pub nvars: usize,
    pub characteristic: u64,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, u64), u64> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Projective dimension of the module S/I.
    pub fn pd_module(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn total_betti(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(bi, _), _)| bi == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Alternating sum sum_i (-1)^i beta_{i,j} t^j, the Euler form that must
    /// reproduce the Hilbert numerator.
    pub fn euler_polynomial(&self) -> Vec<i128> {
        let mut out = Vec::new();
        for (&(i, j), &v) in &self.entries {
            let j = j as usize;
            if out.len() <= j {
                out.resize(j + 1, 0);
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[j] += sign * v as i128;
        }
        trim(&mut out);
        out
    }

    /// Diagonal (Macaulay-style) layout: row r, column i holds
    /// beta_{i, i+r}.
    pub fn to_diagonal_string(&self) -> String {
        if self.entries.is_empty() {
            return String::from("(empty table)\n");
        }
        let max_i = self.pd_module();
        let max_r = self
            .entries
            .keys()
            .map(|&(i, j)| j as usize - i)
            .max()
            .unwrap_or(0);
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(2);
        let mut out = String::new();
        out.push_str("      ");
        for i in 0..=max_i {
            out.push_str(&format!("{i:>width$} "));
        }
        out.push('\n');
        for r in 0..=max_r {
            out.push_str(&format!("{r:>4}: "));
            for i in 0..=max_i {
                let v = self.entry(i, (i + r) as u64);
                if v == 0 {
                    out.push_str(&format!("{:>width$} ", "."));
                } else {
                    out.push_str(&format!("{v:>width$} "));
                }
            }
            out.push('\n');
        }
        out
    }

    /// JSON object {"i,j": value}.
    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, u64> = self
            .entries
            .iter()
            .map(|(&(i, j), &v)| (format!("{i},{j}"), v))
            .collect();
        serde_json::to_string_pretty(&map).expect("betti table serializes")
    }
}

fn check_characteristic(c: u64) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    if c >= 1 << 31 || !is_prime(c) {
        return Err(Error::Invalid(format!(
            "characteristic must be 0 or a prime below 2^31, got {c}"
        )));
    }
    Ok(())
}

/// The graded Betti table of S/I over the field of the selected
/// characteristic.
pub fn betti_table(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    check_characteristic(opts.characteristic)?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::Invalid("Betti table of the zero ring".into()));
    }
    let nvars = ideal.nvars();
    let gens: Vec<Vec<u64>> = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut v = vec![0u64; nvars];
            for &(w, e) in g.exps() {
                v[w] = e;
            }
            v
        })
        .collect();

    // Join-closure of the generator degrees: every multidegree carrying a
    // nonzero Betti number of S/I in homological degree >= 1 is the lcm of a
    // set of generators.
    let mut degrees: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for g in &gens {
        if degrees.insert(g.clone()) {
            queue.push(g.clone());
        }
    }
    while let Some(sigma) = queue.pop() {
        for g in &gens {
            let join: Vec<u64> = sigma.iter().zip(g).map(|(&a, &b)| a.max(b)).collect();
            if !degrees.contains(&join) {
                if degrees.len() >= opts.max_multidegrees {
                    return Err(Error::Budget {
                        what: "multidegrees",
                        count: degrees.len() + 1,
                        budget: opts.max_multidegrees,
                    });
                }
                degrees.insert(join.clone());
                queue.push(join);
            }
        }
    }

    let mut entries: BTreeMap<(usize, u64), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for sigma in &degrees {
        let betti = betti_at_multidegree(&gens, sigma, opts)?;
        if !betti.is_empty() {
            let total: u64 = sigma.iter().sum();
            for (i, v) in betti {
                *entries.entry((i, total)).or_insert(0) += v;
            }
        }
    }
    Ok(BettiTable {
        entries,
        nvars,
        characteristic: opts.characteristic,
    })
}

/// Nonzero beta_{i,sigma}(S/I) values at one multidegree, as (i, value).
fn betti_at_multidegree(
    gens: &[Vec<u64>],
    sigma: &[u64],
    opts: &BettiOptions,
) -> Result<Vec<(usize, u64)>> {
    // Local vertex set: the support of sigma.
    let verts: Vec<usize> = (0..sigma.len()).filter(|&v| sigma[v] > 0).collect();
    let nloc = verts.len();
    let local = |v: usize| verts.binary_search(&v).unwrap();

    // Facets of the restricted complex: supp(sigma - g) for g dividing sigma.
    let mut facets: Vec<Bits> = Vec::new();
    for g in gens {
        if g.iter().zip(sigma).all(|(&e, &s)| e <= s) {
            let mut d = Bits::new(nloc);
            for &v in &verts {
                if sigma[v] > g[v] {
                    d.insert(local(v));
                }
            }
            facets.push(d);
        }
    }
    if facets.is_empty() {
        return Ok(Vec::new());
    }
    // absorb non-maximal facets
    facets.sort_by_key(|f| std::cmp::Reverse(f.count()));
    let mut maximal: Vec<Bits> = Vec::new();
    'f: for f in facets {
        for m in &maximal {
            if f.is_subset(m) {
                continue 'f;
            }
        }
        maximal.push(f);
    }
    // cone / simplex shortcuts: contractible complexes contribute nothing
    if maximal.len() == 1 {
        return if maximal[0].is_empty() {
            // K = {empty face}: reduced homology in dimension -1, i.e. a
            // minimal generator at this multidegree.
            Ok(vec![(1, 1)])
        } else {
            Ok(Vec::new())
        };
    }
    let mut common = maximal[0].clone();
    for m in &maximal[1..] {
        common.intersect_with(m);
    }
    if !common.is_empty() {
        return Ok(Vec::new());
    }

    // Enumerate all faces, grouped by cardinality.
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut stack: Vec<Bits> = Vec::new();
    for m in &maximal {
        if seen.insert(m.clone()) {
            stack.push(m.clone());
        }
    }
    while let Some(f) = stack.pop() {
        if seen.len() > opts.max_faces {
            return Err(Error::Budget {
                what: "complex faces",
                count: seen.len(),
                budget: opts.max_faces,
            });
        }
        for v in f.iter() {
            let mut child = f.clone();
            child.remove(v);
            if seen.insert(child.clone()) {
                stack.push(child);
            }
        }
    }
    let max_card = maximal.iter().map(|m| m.count()).max().unwrap();
    let mut levels: Vec<Vec<Bits>> = vec![Vec::new(); max_card + 1];
    for f in seen {
        levels[f.count()].push(f);
    }
    for level in &mut levels {
        level.sort();
    }
    let index: Vec<HashMap<&Bits, usize>> = levels
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();

    // rank of the boundary map from cardinality k to k-1, for k = 1..
    let mut ranks = vec![0usize; max_card + 2];
    for k in 1..=max_card {
        if levels[k].is_empty() {
            continue;
        }
        if levels[k].len() > opts.max_matrix {
            return Err(Error::Budget {
                what: "boundary matrix dimension",
                count: levels[k].len(),
                budget: opts.max_matrix,
            });
        }
        let rows: Vec<SparseRow> = levels[k]
            .iter()
            .map(|face| {
                let mut row: SparseRow = Vec::with_capacity(k);
                for (pos, v) in face.iter().enumerate() {
                    let mut sub = face.clone();
                    sub.remove(v);
                    let col = index[k - 1][&sub];
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    row.push((col, sign));
                }
                row.sort_unstable_by_key(|&(c, _)| c);
                row
            })
            .collect();
        ranks[k] = if opts.characteristic == 0 {
            rank_q(&rows)
        } else {
            rank_gf(&rows, opts.characteristic)
        };
    }

    // beta_{i,sigma}(S/I) = dim H~_{i-2} = f_{i-1} - rank_{i-1} - rank_i
    let mut out = Vec::new();
    for i in 1..=max_card + 1 {
        let f = levels.get(i - 1).map_or(0, |l| l.len());
        let h = f as i64 - ranks[i - 1] as i64 - ranks[i] as i64;
        debug_assert!(h >= 0);
        if h > 0 {
            out.push((i, h as u64));
        }
    }
    Ok(out)
}

fn trim(poly: &mut Vec<i128>) {
    while poly.last() == Some(&0) {
        poly.pop();
    }
}

/// The numerator K-polynomial of S/I: the alternating sum, over subsets of
/// the generators, of t^{deg lcm}. Computed by pivot recursion with
/// memoization; coefficients indexed by degree.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<i128> {
    fn go(gens: &[Monomial], memo: &mut HashMap<Vec<Monomial>, Vec<i128>>) -> Vec<i128> {
        if gens.iter().any(|g| g.is_unit()) {
            return Vec::new();
        }
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().all(|g| g.exps().len() == 1) {
            // complete intersection of pure powers: product of (1 - t^e)
            let mut acc = vec![1i128];
            for g in gens {
                let e = g.degree() as usize;
                let mut next = vec![0i128; acc.len() + e];
                for (i, &c) in acc.iter().enumerate() {
                    next[i] += c;
                    next[i + e] -= c;
                }
                acc = next;
            }
            trim(&mut acc);
            return acc;
        }
        let key: Vec<Monomial> = gens.to_vec();
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        // pivot on the most frequent variable among non-pure-power gens
        let mut freq: HashMap<usize, usize> = HashMap::new();
        for g in gens {
            if g.exps().len() > 1 {
                for &(v, _) in g.exps() {
                    *freq.entry(v).or_insert(0) += 1;
                }
            }
        }
        let (&v, _) = freq
            .iter()
            .max_by_key(|&(&v, &c)| (c, std::cmp::Reverse(v)))
            .expect("non-pure-power generator exists");
        let xv = Monomial::var(v);
        // I + (x_v): x_v plus the generators not using v
        let mut plus: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.exponent(v) == 0)
            .cloned()
            .collect();
        plus.push(xv.clone());
        plus.sort();
        // I : x_v, reduced to minimal generators
        let mut colon: Vec<Monomial> = gens.iter().map(|g| g.div_saturating(&xv)).collect();
        colon.sort();
        colon.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(colon.len());
        'outer: for g in &colon {
            for h in &colon {
                if h != g && h.divides(g) {
                    continue 'outer;
                }
            }
            minimal.push(g.clone());
        }
        let a = go(&plus, memo);
        let b = go(&minimal, memo);
        let mut out = vec![0i128; a.len().max(b.len() + 1)];
        for (i, &c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in b.iter().enumerate() {
            out[i + 1] += c;
        }
        trim(&mut out);
        memo.insert(key, out.clone());
        out
    }
    let mut gens = ideal.gens().to_vec();
    gens.sort();
    go(&gens, &mut HashMap::new())
}

/// Exact division of a polynomial by (1-t)^k; errors if the division does
/// not come out even.
pub fn divide_by_one_minus_t(poly: &[i128], k: usize) -> Result<Vec<i128>> {
    let mut cur: Vec<i128> = poly.to_vec();
    trim(&mut cur);
    for _ in 0..k {
        if cur.is_empty() {
            continue;
        }
        if cur.iter().sum::<i128>() != 0 {
            return Err(Error::Invalid(
                "polynomial is not divisible by (1-t)".into(),
            ));
        }
        // q = p / (1-t) via prefix sums
        let mut q = Vec::with_capacity(cur.len().saturating_sub(1));
        let mut acc = 0i128;
        for &c in &cur[..cur.len() - 1] {
            acc += c;
            q.push(acc);
        }
        trim(&mut q);
        cur = q;
    }
    Ok(cur)
}

/// Coefficients of numerator / (1-t)^nvars as a power series up to `bound`:
/// the Hilbert function of S/I.
pub fn hilbert_function_from_numerator(numerator: &[i128], nvars: usize, bound: usize) -> Vec<i128> {
    // series of 1/(1-t)^n is binomial(n-1+d, d)
    let mut series = vec![0i128; bound + 1];
    for (d, slot) in series.iter_mut().enumerate() {
        let mut b = 1i128;
        for i in 0..d {
            b = b * (nvars as i128 + i as i128) / (i as i128 + 1);
        }
        *slot = if nvars == 0 { i128::from(d == 0) } else { b };
    }
    let mut out = vec![0i128; bound + 1];
    for (e, &c) in numerator.iter().enumerate() {
        for d in e..=bound {
            out[d] += c * series[d - e];
        }
    }
    out
}

/// Count monomials of each total degree <= bound outside the ideal, by
/// direct enumeration. Test oracle for the numerator.
pub fn count_standard_monomials(ideal: &MonomialIdeal, bound: usize) -> Vec<i128> {
    let n = ideal.nvars();
    let mut out = vec![0i128; bound + 1];
    let mut exps = vec![0u64; n];
    fn go(
        v: usize,
        left: usize,
        exps: &mut Vec<u64>,
        ideal: &MonomialIdeal,
        out: &mut Vec<i128>,
        bound: usize,
    ) {
        if v == exps.len() {
            let m = Monomial::from_exps(exps.iter().enumerate().map(|(i, &e)| (i, e)).collect());
            if !ideal.contains(&m) {
                out[bound - left] += 1;
            }
            return;
        }
        for e in 0..=left {
            exps[v] = e as u64;
            go(v + 1, left - e, exps, ideal, out, bound);
        }
        exps[v] = 0;
    }
    // count monomials of degree exactly d for each d
    for d in 0..=bound {
        let mut scratch = vec![0i128; d + 1];
        go(0, d, &mut exps, ideal, &mut scratch, d);
        out[d] = scratch[d];
    }
    out
}

/// Ring-theoretic properties derived from the Betti table and the minimal
/// primes. Depth uses the Auslander-Buchsbaum convention
/// depth = nvars - pd(S/I).
#[derive(Clone, Debug)]
pub struct RingProperties {
    pub pd_module: usize,
    pub pd_ideal: usize,
    pub codim: usize,
    pub depth: usize,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub linear_resolution: bool,
    pub linear_resolution_reason: Option<String>,
    pub dual_cohen_macaulay: Option<bool>,
}

pub fn ring_properties(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<RingProperties> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let table = betti_table(ideal, opts)?;
    let pd_module = table.pd_module();
    let pd_ideal = pd_module.saturating_sub(1);
    let codim = ideal
        .minimal_primes()?
        .iter()
        .map(|p| p.count())
        .min()
        .unwrap_or(0);
    let depth = ideal.nvars() - pd_module;
    let cm = pd_module == codim;
    let gorenstein = cm && table.total_betti(pd_module) == 1;
    let degrees: BTreeSet<u64> = ideal.gens().iter().map(|g| g.degree()).collect();
    let (linear, reason) = if degrees.len() != 1 {
        (
            false,
            Some("generators of mixed degrees".to_string()),
        )
    } else {
        let d = *degrees.iter().next().unwrap();
        let bad = table
            .entries()
            .iter()
            .find(|&(&(i, j), &v)| i >= 1 && v > 0 && j != d + i as u64 - 1);
        match bad {
            Some((&(i, j), _)) => (
                false,
                Some(format!("beta_{{{},{}}} lies off the linear strand", i, j)),
            ),
            None => (true, None),
        }
    };
    let dual_cm = if ideal.is_squarefree() {
        let dual = alexander_dual_checked(ideal)?;
        let dual_table = betti_table(&dual, opts)?;
        let dual_codim = dual
            .minimal_primes()?
            .iter()
            .map(|p| p.count())
            .min()
            .unwrap_or(0);
        Some(dual_table.pd_module() == dual_codim)
    } else {
        None
    };
    Ok(RingProperties {
        pd_module,
        pd_ideal,
        codim,
        depth,
        cohen_macaulay: cm,
        gorenstein,
        linear_resolution: linear,
        linear_resolution_reason: reason,
        dual_cohen_macaulay: dual_cm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> MonomialIdeal {
        MonomialIdeal::from_text(s).unwrap()
    }

    #[test]
    fn betti_principal() {
        let i = text("vars: x\nx\n");
        let t = betti_table(&i, &BettiOptions::default()).unwrap();
        assert_eq!(t.entry(0, 0), 1);
        assert_eq!(t.entry(1, 1), 1);
        assert_eq!(t.pd_module(), 1);
    }

    #[test]
    fn betti_artinian_square() {
        // (x^2, xy, y^2): beta_{1,2} = 3, beta_{2,3} = 2 (Hilbert-Burch).
        let i = text("vars: x y\nx^2\nx*y\ny^2\n");
        let t = betti_table(&i, &BettiOptions::default()).unwrap();
        assert_eq!(t.entry(1, 2), 3);
        assert_eq!(t.entry(2, 3), 2);
        assert_eq!(t.pd_module(), 2);
    }

    #[test]
    fn betti_letterplace_matches_artinian_reduction() {
        let l = crate::letterplace::letterplace_n(2, &crate::poset::Poset::chain(2)).unwrap();
        let t = betti_table(&l.ideal, &BettiOptions::default()).unwrap();
        assert_eq!(t.entry(1, 2), 3);
        assert_eq!(t.entry(2, 3), 2);
        assert_eq!(t.pd_module(), 2);
    }

    #[test]
    fn hilbert_examples() {
        let i = text("vars: x y\nx^2\nx*y\ny^2\n");
        assert_eq!(hilbert_numerator(&i), vec![1, 0, -3, 2]);
        let i = text("vars: x\nx\n");
        assert_eq!(hilbert_numerator(&i), vec![1, -1]);
        let z = MonomialIdeal::zero(vec!["x".into()]);
        assert_eq!(hilbert_numerator(&z), vec![1]);
    }

    #[test]
    fn hilbert_function_matches_counting() {
        for src in [
            "vars: x y\nx^2\nx*y\ny^2\n",
            "vars: x y z\nx*y\ny*z\n",
            "vars: a b c d\na*c\na*d\nb*d\n",
        ] {
            let i = text(src);
            let numerator = hilbert_numerator(&i);
            let hf = hilbert_function_from_numerator(&numerator, i.nvars(), 6);
            assert_eq!(hf, count_standard_monomials(&i, 6), "{src}");
        }
    }

    #[test]
    fn euler_identity() {
        for src in [
            "vars: x y\nx^2\nx*y\ny^2\n",
            "vars: a b c d\na*c\na*d\nb*d\n",
            "vars: x y z\nx*y*z\n",
        ] {
            let i = text(src);
            let t = betti_table(&i, &BettiOptions::default()).unwrap();
            assert_eq!(t.euler_polynomial(), hilbert_numerator(&i), "{src}");
        }
    }

    #[test]
    fn division_by_one_minus_t() {
        // (1-t)^2 = 1 - 2t + t^2
        let q = divide_by_one_minus_t(&[1, -2, 1], 2).unwrap();
        assert_eq!(q, vec![1]);
        assert!(divide_by_one_minus_t(&[1, 1], 1).is_err());
    }

    #[test]
    fn char_dependence_of_projective_plane() {
        // The 6-vertex triangulation of the real projective plane: its
        // Stanley-Reisner ring has pd 3 over Q and pd 4 over F_2.
        let vars = "t1 t2 t3 t4 t5 t6";
        let faces: [[usize; 3]; 10] = [
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [1, 4, 6],
            [1, 5, 6],
            [2, 3, 6],
            [2, 4, 5],
            [2, 5, 6],
            [3, 4, 5],
            [3, 4, 6],
        ];
        let all: Vec<[usize; 3]> = (1..=6)
            .flat_map(|a| {
                (a + 1..=6).flat_map(move |b| (b + 1..=6).map(move |c| [a, b, c]))
            })
            .collect();
        let nonfaces: Vec<String> = all
            .iter()
            .filter(|t| !faces.contains(t))
            .map(|t| format!("t{}*t{}*t{}", t[0], t[1], t[2]))
            .collect();
        assert_eq!(nonfaces.len(), 10);
        let textsrc = format!("vars: {vars}\n{}\n", nonfaces.join("\n"));
        let i = text(&textsrc);
        let t0 = betti_table(&i, &BettiOptions::default()).unwrap();
        let t2 = betti_table(&i, &BettiOptions::with_characteristic(2)).unwrap();
        assert_eq!(t0.pd_module(), 3);
        assert_eq!(t2.pd_module(), 4);
    }

    #[test]
    fn ring_properties_examples() {
        // (x^2, y^2) is a complete intersection: Gorenstein.
        let i = text("vars: x y\nx^2\ny^2\n");
        let p = ring_properties(&i, &BettiOptions::default()).unwrap();
        assert!(p.cohen_macaulay && p.gorenstein);
        assert_eq!(p.pd_module, 2);
        assert_eq!(p.depth, 0);
        // (x^2, xy, y^2) is CM but not Gorenstein.
        let i = text("vars: x y\nx^2\nx*y\ny^2\n");
        let p = ring_properties(&i, &BettiOptions::default()).unwrap();
        assert!(p.cohen_macaulay && !p.gorenstein);
        assert!(p.linear_resolution);
        // mixed degrees report a reason
        let i = text("vars: x y\nx^2\ny^3\n");
        let p = ring_properties(&i, &BettiOptions::default()).unwrap();
        assert!(!p.linear_resolution);
        assert!(p.linear_resolution_reason.is_some());
    }

    #[test]
    fn betti_rejects_degenerate_input() {
        assert!(betti_table(&MonomialIdeal::zero(vec!["x".into()]), &BettiOptions::default())
            .is_err());
        let unit = text("vars: x\n1\n");
        assert!(betti_table(&unit, &BettiOptions::default()).is_err());
        assert!(check_characteristic(4).is_err());
    }
}
