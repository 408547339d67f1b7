//! Monomials and monomial ideals over a labeled variable set.
//!
//! Ideals are stored by their minimal generators in a deterministic order.
//! Alexander duality is implemented by three independent routes (transversal
//! enumeration, facet complements, minimal primes) which must agree on
//! squarefree input.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::bits::Bits;
use crate::{Error, Result};

/// A monomial as a sparse exponent vector over variable indices.
/// No zero exponents are stored; the empty vector is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<(usize, u64)>,
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: usize) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_exps(mut exps: Vec<(usize, u64)>) -> Monomial {
        exps.retain(|&(_, e)| e > 0);
        exps.sort_unstable();
        let mut out: Vec<(usize, u64)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { exps: out }
    }

    pub fn from_support(support: &Bits) -> Monomial {
        Monomial {
            exps: support.iter().map(|v| (v, 1)).collect(),
        }
    }

    pub fn exps(&self) -> &[(usize, u64)] {
        &self.exps
    }

    pub fn exponent(&self, v: usize) -> u64 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn support(&self, nvars: usize) -> Bits {
        Bits::from_indices(nvars, self.exps.iter().map(|&(v, _)| v))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend_from_slice(&other.exps);
        Monomial::from_exps(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::new();
        for &(v, e) in &self.exps {
            exps.push((v, e.max(other.exponent(v))));
        }
        for &(v, e) in &other.exps {
            if self.exponent(v) == 0 {
                exps.push((v, e));
            }
        }
        Monomial::from_exps(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&(v, e)| (v, e.min(other.exponent(v))))
            .collect();
        Monomial::from_exps(exps)
    }

    /// self / other, saturating each exponent at zero.
    pub fn div_saturating(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&(v, e)| (v, e.saturating_sub(other.exponent(v))))
            .collect();
        Monomial::from_exps(exps)
    }

    fn render(&self, vars: &[String]) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    vars[v].clone()
                } else {
                    format!("{}^{}", vars[v], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A monomial ideal over an ordered variable list, stored by minimal
/// generators sorted by (degree, exponent vector).
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens.iter().map(|g| g.render(&self.vars)).collect::<Vec<_>>().join(", "))
    }
}

fn check_vars(vars: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for v in vars {
        if v.is_empty()
            || v.contains(char::is_whitespace)
            || v.contains('*')
            || v.contains('^')
            || v == "1"
        {
            return Err(Error::Invalid(format!("bad variable label {v:?}")));
        }
        if !seen.insert(v) {
            return Err(Error::DuplicateLabel(v.clone()));
        }
    }
    Ok(())
}

impl MonomialIdeal {
    /// Normalize a generating set: drop divisibility-redundant generators and
    /// duplicates, sort deterministically.
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        check_vars(&vars)?;
        for g in &gens {
            if let Some(&(v, _)) = g.exps().iter().find(|&&(v, _)| v >= vars.len()) {
                return Err(Error::UnknownVariable(format!("#{v}")));
            }
        }
        Ok(Self::normalized(vars, gens))
    }

    fn normalized(vars: Vec<String>, mut gens: Vec<Monomial>) -> MonomialIdeal {
        gens.sort_by(cmp_graded);
        gens.dedup();
        let mut keep: Vec<Monomial> = Vec::with_capacity(gens.len());
        'outer: for g in gens {
            for k in &keep {
                if k.divides(&g) {
                    continue 'outer;
                }
            }
            keep.push(g);
        }
        MonomialIdeal { vars, gens: keep }
    }

    /// Build from labeled exponent lists.
    pub fn from_labels(vars: Vec<String>, gens: Vec<Vec<(String, u64)>>) -> Result<MonomialIdeal> {
        check_vars(&vars)?;
        let index: HashMap<&str, usize> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut ms = Vec::with_capacity(gens.len());
        for g in gens {
            let mut exps = Vec::with_capacity(g.len());
            for (l, e) in g {
                let v = *index
                    .get(l.as_str())
                    .ok_or_else(|| Error::UnknownVariable(l.clone()))?;
                exps.push((v, e));
            }
            ms.push(Monomial::from_exps(exps));
        }
        Ok(Self::normalized(vars, ms))
    }

    pub fn zero(vars: Vec<String>) -> MonomialIdeal {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, label: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVariable(label.to_string()))
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn lcm_of_gens(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::unit(), |acc, g| acc.lcm(g))
    }

    pub fn supports(&self) -> Vec<Bits> {
        self.gens.iter().map(|g| g.support(self.nvars())).collect()
    }

    /// Sum of two ideals over the same variable list.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.vars != other.vars {
            return Err(Error::AmbientMismatch("ideal sum over different rings".into()));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::normalized(self.vars.clone(), gens))
    }

    pub fn render_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render(&self.vars)).collect()
    }

    /// Ideal text format: first line `vars: v1 v2 ...`, then one monomial per
    /// line as `*`-separated `v` or `v^k` factors.
    pub fn to_text(&self) -> String {
        let mut out = format!("vars: {}\n", self.vars.join(" "));
        for g in &self.gens {
            out.push_str(&g.render(&self.vars));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<MonomialIdeal> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines
            .next()
            .ok_or_else(|| Error::Parse("empty ideal text".into()))?;
        let vars_str = head
            .strip_prefix("vars:")
            .ok_or_else(|| Error::Parse("ideal text must start with `vars:`".into()))?;
        let vars: Vec<String> = vars_str.split_whitespace().map(String::from).collect();
        check_vars(&vars)?;
        let index: HashMap<&str, usize> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut gens = Vec::new();
        for line in lines {
            let line = line.trim();
            if line == "1" {
                gens.push(Monomial::unit());
                continue;
            }
            let mut exps = Vec::new();
            for factor in line.split('*') {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u64 = e
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                        if e < 2 {
                            return Err(Error::Parse(format!(
                                "exponents written with ^ must be >= 2, got {factor:?}"
                            )));
                        }
                        (n, e)
                    }
                    None => (factor, 1),
                };
                let v = *index
                    .get(name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                exps.push((v, exp));
            }
            gens.push(Monomial::from_exps(exps));
        }
        Ok(Self::normalized(vars, gens))
    }

    /// Apply a variable substitution; exponents of merged variables add.
    pub fn substitute(
        &self,
        varmap: &HashMap<String, String>,
        new_vars: Vec<String>,
    ) -> Result<MonomialIdeal> {
        check_vars(&new_vars)?;
        let new_index: HashMap<&str, usize> = new_vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut target = Vec::with_capacity(self.nvars());
        for v in &self.vars {
            let image = varmap
                .get(v)
                .ok_or_else(|| Error::Invalid(format!("varmap misses variable {v}")))?;
            let idx = *new_index
                .get(image.as_str())
                .ok_or_else(|| Error::UnknownVariable(image.clone()))?;
            target.push(idx);
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::from_exps(
                    g.exps().iter().map(|&(v, e)| (target[v], e)).collect(),
                )
            })
            .collect();
        Ok(Self::normalized(new_vars, gens))
    }

    /// Substitution by index map (internal fast path).
    pub fn substitute_indices(
        &self,
        target: &[usize],
        new_vars: Vec<String>,
    ) -> Result<MonomialIdeal> {
        check_vars(&new_vars)?;
        if target.len() != self.nvars() {
            return Err(Error::Invalid("index map length mismatch".into()));
        }
        if let Some(&t) = target.iter().find(|&&t| t >= new_vars.len()) {
            return Err(Error::UnknownVariable(format!("#{t}")));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::from_exps(
                    g.exps().iter().map(|&(v, e)| (target[v], e)).collect(),
                )
            })
            .collect();
        Ok(Self::normalized(new_vars, gens))
    }

    /// Colon ideal (I : m), generated by g / gcd(g, m).
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.div_saturating(m))
            .collect();
        Self::normalized(self.vars.clone(), gens)
    }

    /// Facets of the Stanley-Reisner complex of a squarefree ideal: the
    /// maximal subsets of the variable set that contain no generator support.
    pub fn facets(&self) -> Result<Vec<Bits>> {
        self.require_squarefree()?;
        Ok(maximal_independent_sets(self.nvars(), &self.supports()))
    }

    fn require_squarefree(&self) -> Result<()> {
        if let Some(g) = self.gens.iter().find(|g| !g.is_squarefree()) {
            return Err(Error::NotSquarefree(g.render(&self.vars)));
        }
        Ok(())
    }

    /// Minimal primes as variable index sets, i.e. the inclusion-minimal
    /// vertex covers of the generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<Bits>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut covers = minimal_covers(self.nvars(), &self.supports());
        covers.sort();
        Ok(covers)
    }

    /// Associated primes, brute force: all monomial primes of the form
    /// (I : m) with m dividing the lcm of the generators.
    pub fn associated_primes(&self, divisor_budget: usize) -> Result<Vec<Bits>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let lcm = self.lcm_of_gens();
        let count: u128 = lcm
            .exps()
            .iter()
            .map(|&(_, e)| e as u128 + 1)
            .product();
        if count > divisor_budget as u128 {
            return Err(Error::Budget {
                what: "lcm divisors",
                count: count.min(usize::MAX as u128) as usize,
                budget: divisor_budget,
            });
        }
        let mut out = BTreeSet::new();
        let mut divisor = vec![0u64; lcm.exps().len()];
        loop {
            let m = Monomial::from_exps(
                lcm.exps()
                    .iter()
                    .zip(&divisor)
                    .map(|(&(v, _), &e)| (v, e))
                    .collect(),
            );
            if !self.contains(&m) {
                let colon = self.colon(&m);
                if colon.gens().iter().all(|g| g.degree() == 1) && !colon.is_zero() {
                    out.insert(colon.gens().iter().map(|g| g.exps()[0].0).fold(
                        Bits::new(self.nvars()),
                        |mut b, v| {
                            b.insert(v);
                            b
                        },
                    ));
                }
            }
            // odometer over exponents bounded by the lcm
            let mut k = 0;
            loop {
                if k == divisor.len() {
                    return Ok(out.into_iter().collect());
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
}

/// Graded order on monomials: by total degree, then lexicographic with the
/// earlier variable's higher power first (so x^2 < x*y < y^2).
pub fn cmp_graded(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    match a.degree().cmp(&b.degree()) {
        Equal => {}
        o => return o,
    }
    let (ae, be) = (a.exps(), b.exps());
    let mut i = 0;
    loop {
        match (ae.get(i), be.get(i)) {
            (None, None) => return Equal,
            (Some(_), None) => return Less,
            (None, Some(_)) => return Greater,
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                match va.cmp(&vb) {
                    Less => return Less,
                    Greater => return Greater,
                    Equal => match eb.cmp(&ea) {
                        Equal => i += 1,
                        o => return o,
                    },
                }
            }
        }
    }
}

/// How to compute an Alexander dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualMethod {
    /// Minimal transversals of the generator supports.
    Transversal,
    /// Complements of the facets of the associated simplicial complex.
    FacetComplement,
    /// Generators of the minimal primes.
    Primes,
}

/// Alexander dual of a squarefree ideal.
pub fn alexander_dual(ideal: &MonomialIdeal, method: DualMethod) -> Result<MonomialIdeal> {
    ideal.require_squarefree()?;
    let n = ideal.nvars();
    let supports = ideal.supports();
    let sets: Vec<Bits> = match method {
        DualMethod::Transversal => minimal_transversals(n, &supports),
        DualMethod::FacetComplement => maximal_independent_sets(n, &supports)
            .into_iter()
            .map(|f| f.complement())
            .collect(),
        DualMethod::Primes => minimal_covers(n, &supports),
    };
    let gens = sets.iter().map(Monomial::from_support).collect();
    Ok(MonomialIdeal::normalized(ideal.vars().to_vec(), gens))
}

/// Dual by all three routes, insisting that they agree.
pub fn alexander_dual_checked(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let a = alexander_dual(ideal, DualMethod::Transversal)?;
    let b = alexander_dual(ideal, DualMethod::FacetComplement)?;
    let c = alexander_dual(ideal, DualMethod::Primes)?;
    if a != b || a != c {
        return Err(Error::Bug(format!(
            "Alexander dual routes disagree on {ideal:?}"
        )));
    }
    Ok(a)
}

/// Minimal transversals (hitting sets) of a set system, by sequential Berge
/// multiplication with absorption pruning.
pub fn minimal_transversals(n: usize, edges: &[Bits]) -> Vec<Bits> {
    let mut current: Vec<Bits> = vec![Bits::new(n)];
    let mut order: Vec<&Bits> = edges.iter().collect();
    order.sort_by_key(|e| e.count());
    for edge in order {
        if edge.is_empty() {
            // An empty edge cannot be hit: no transversal exists.
            return Vec::new();
        }
        let mut next: Vec<Bits> = Vec::new();
        let mut extend: Vec<Bits> = Vec::new();
        for t in current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                extend.push(t);
            }
        }
        for t in extend {
            'vertex: for v in edge.iter() {
                let mut cand = t.clone();
                cand.insert(v);
                for kept in &next {
                    if kept.is_subset(&cand) {
                        continue 'vertex;
                    }
                }
                next.retain(|kept| !cand.is_subset(kept));
                next.push(cand);
            }
        }
        current = next;
    }
    current.sort();
    current
}

/// Minimal vertex covers via branch-and-bound on the first uncovered edge.
/// An independent route from `minimal_transversals` (covers of the supports
/// are exactly the transversals, but the search is organized differently).
pub fn minimal_covers(n: usize, edges: &[Bits]) -> Vec<Bits> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let mut found: Vec<Bits> = Vec::new();
    let mut partial = Bits::new(n);
    fn go(edges: &[Bits], partial: &mut Bits, found: &mut Vec<Bits>) {
        match edges.iter().find(|e| !e.intersects(partial)) {
            None => {
                for f in found.iter() {
                    if f.is_subset(partial) {
                        return;
                    }
                }
                found.retain(|f| !partial.is_subset(f));
                found.push(partial.clone());
            }
            Some(e) => {
                for v in e.iter() {
                    partial.insert(v);
                    go(edges, partial, found);
                    partial.remove(v);
                }
            }
        }
    }
    go(edges, &mut partial, &mut found);
    found.sort();
    found
}

/// Maximal subsets of the vertex set containing no edge, by inclusion /
/// exclusion branching with a maximality check at the leaves.
pub fn maximal_independent_sets(n: usize, edges: &[Bits]) -> Vec<Bits> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let mut out: Vec<Bits> = Vec::new();
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut cur = Bits::new(n);
    fn is_independent(set: &Bits, edges: &[Bits]) -> bool {
        edges.iter().all(|e| !e.is_subset(set))
    }
    fn go(
        v: usize,
        n: usize,
        cur: &mut Bits,
        edges: &[Bits],
        out: &mut Vec<Bits>,
        seen: &mut HashSet<Bits>,
    ) {
        if v == n {
            // maximality: no vertex outside can be added
            for w in 0..n {
                if !cur.contains(w) {
                    let mut ext = cur.clone();
                    ext.insert(w);
                    if is_independent(&ext, edges) {
                        return;
                    }
                }
            }
            if seen.insert(cur.clone()) {
                out.push(cur.clone());
            }
            return;
        }
        cur.insert(v);
        if is_independent(cur, edges) {
            go(v + 1, n, cur, edges, out, seen);
        }
        cur.remove(v);
        go(v + 1, n, cur, edges, out, seen);
    }
    go(0, n, &mut cur, edges, &mut out, &mut seen);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: &[&str], gens: &[&[(&str, u64)]]) -> MonomialIdeal {
        MonomialIdeal::from_labels(
            vars.iter().map(|s| s.to_string()).collect(),
            gens.iter()
                .map(|g| g.iter().map(|&(v, e)| (v.to_string(), e)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn normalize_examples() {
        let i = ideal(&["x", "y"], &[&[("x", 1)], &[("x", 1), ("y", 1)]]);
        assert_eq!(i.render_gens(), vec!["x"]);
        let i = ideal(
            &["x", "y", "z"],
            &[&[("x", 1), ("y", 1)], &[("y", 1), ("z", 1)], &[("x", 1), ("y", 1)]],
        );
        assert_eq!(i.render_gens(), vec!["x*y", "y*z"]);
        let z = MonomialIdeal::zero(vec!["x".into()]);
        assert!(z.is_zero());
    }

    #[test]
    fn unknown_variable_rejected() {
        let r = MonomialIdeal::from_labels(
            vec!["x".into()],
            vec![vec![("y".into(), 1)]],
        );
        assert!(matches!(r, Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn dual_small_examples() {
        let i = ideal(&["x", "y"], &[&[("x", 1)], &[("y", 1)]]);
        let d = alexander_dual_checked(&i).unwrap();
        assert_eq!(d.render_gens(), vec!["x*y"]);
        let dd = alexander_dual_checked(&d).unwrap();
        assert_eq!(dd, i);

        let i = ideal(&["x", "y"], &[&[("x", 1), ("y", 1)]]);
        let d = alexander_dual_checked(&i).unwrap();
        assert_eq!(d.render_gens(), vec!["x", "y"]);
    }

    #[test]
    fn dual_letterplace_2_2() {
        // L(2,[2]) with a=x11, b=x12, c=x21, d=x22 has dual (ab, ad, cd).
        let i = ideal(
            &["a", "b", "c", "d"],
            &[&[("a", 1), ("c", 1)], &[("a", 1), ("d", 1)], &[("b", 1), ("d", 1)]],
        );
        let d = alexander_dual_checked(&i).unwrap();
        assert_eq!(d.render_gens(), vec!["a*b", "a*d", "c*d"]);
        assert_eq!(alexander_dual_checked(&d).unwrap(), i);
    }

    #[test]
    fn dual_rejects_non_squarefree() {
        let i = ideal(&["x", "y"], &[&[("x", 2)]]);
        match alexander_dual(&i, DualMethod::Transversal) {
            Err(Error::NotSquarefree(g)) => assert_eq!(g, "x^2"),
            other => panic!("expected squarefree rejection, got {other:?}"),
        }
    }

    #[test]
    fn facets_complement_dual_generators() {
        let i = ideal(
            &["a", "b", "c", "d"],
            &[&[("a", 1), ("c", 1)], &[("a", 1), ("d", 1)], &[("b", 1), ("d", 1)]],
        );
        let facets = i.facets().unwrap();
        let dual = alexander_dual(&i, DualMethod::Transversal).unwrap();
        let from_facets: BTreeSet<Monomial> = facets
            .iter()
            .map(|f| Monomial::from_support(&f.complement()))
            .collect();
        let dual_gens: BTreeSet<Monomial> = dual.gens().iter().cloned().collect();
        assert_eq!(from_facets, dual_gens);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(&["x", "y"], &[&[("x", 2), ("y", 1)]]);
        let c = i.colon(&Monomial::from_exps(vec![(0, 1), (1, 1)]));
        assert_eq!(c.render_gens(), vec!["x"]);

        let i = ideal(&["a", "b", "c", "d"], &[&[("a", 1), ("c", 1)], &[("a", 1), ("d", 1)]]);
        let m = Monomial::from_exps(vec![(1, 1), (3, 1)]); // b*d
        assert_eq!(i.colon(&m).render_gens(), vec!["a"]);
    }

    #[test]
    fn colon_membership_property() {
        use crate::rng::Rng;
        let i = ideal(
            &["x", "y", "z"],
            &[&[("x", 2)], &[("x", 1), ("y", 1)], &[("y", 3), ("z", 1)]],
        );
        let mut rng = Rng::new(7);
        for _ in 0..200 {
            let m = Monomial::from_exps(vec![
                (0, rng.below(3) as u64),
                (1, rng.below(3) as u64),
                (2, rng.below(3) as u64),
            ]);
            let g = Monomial::from_exps(vec![
                (0, rng.below(3) as u64),
                (1, rng.below(3) as u64),
                (2, rng.below(3) as u64),
            ]);
            let colon = i.colon(&m);
            // colon(I,m)*m is inside I, and membership of g*m in I is
            // equivalent to g in colon(I,m).
            for cg in colon.gens() {
                assert!(i.contains(&cg.mul(&m)));
            }
            assert_eq!(i.contains(&g.mul(&m)), colon.contains(&g));
        }
    }

    #[test]
    fn minimal_primes_examples() {
        let i = ideal(&["x", "y"], &[&[("x", 1), ("y", 1)]]);
        let primes = i.minimal_primes().unwrap();
        assert_eq!(primes.len(), 2);

        let i = ideal(&["x", "y"], &[&[("x", 2)], &[("x", 1), ("y", 1)], &[("y", 2)]]);
        let ass = i.associated_primes(1 << 20).unwrap();
        assert_eq!(ass.len(), 1);
        assert_eq!(ass[0].to_vec(), vec![0, 1]);
        assert!(MonomialIdeal::zero(vec!["x".into()]).minimal_primes().is_err());
    }

    #[test]
    fn substitute_examples() {
        // (ac, ad, bd) under a,c -> x; b,d -> y gives (x^2, xy, y^2).
        let i = ideal(
            &["a", "b", "c", "d"],
            &[&[("a", 1), ("c", 1)], &[("a", 1), ("d", 1)], &[("b", 1), ("d", 1)]],
        );
        let map: HashMap<String, String> = [
            ("a", "x"),
            ("c", "x"),
            ("b", "y"),
            ("d", "y"),
        ]
        .iter()
        .map(|&(k, v)| (k.to_string(), v.to_string()))
        .collect();
        let s = i.substitute(&map, vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(s.render_gens(), vec!["x^2", "x*y", "y^2"]);

        let id: HashMap<String, String> = [("x", "x"), ("y", "y")]
            .iter()
            .map(|&(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let j = ideal(&["x", "y"], &[&[("x", 1), ("y", 1)]]);
        assert_eq!(j.substitute(&id, vec!["x".into(), "y".into()]).unwrap(), j);

        let all_z: HashMap<String, String> = [("x", "z"), ("y", "z")]
            .iter()
            .map(|&(k, v)| (k.to_string(), v.to_string()))
            .collect();
        assert_eq!(
            j.substitute(&all_z, vec!["z".into()]).unwrap().render_gens(),
            vec!["z^2"]
        );
        assert!(j.substitute(&all_z, vec!["w".into()]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let i = ideal(
            &["x(1,1)", "x(1,2)", "y"],
            &[&[("x(1,1)", 2), ("y", 1)], &[("x(1,2)", 1)]],
        );
        let t = i.to_text();
        let j = MonomialIdeal::from_text(&t).unwrap();
        assert_eq!(i, j);
        assert!(MonomialIdeal::from_text("nope").is_err());
        // unit generator round-trips
        let u = MonomialIdeal::new(vec!["x".into()], vec![Monomial::unit()]).unwrap();
        assert_eq!(MonomialIdeal::from_text(&u.to_text()).unwrap(), u);
    }

    #[test]
    fn dual_involution_on_random_squarefree() {
        use crate::rng::Rng;
        let mut rng = Rng::new(11);
        for _ in 0..30 {
            let n = 4 + rng.below(3);
            let vars: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut gens = Vec::new();
            for _ in 0..(2 + rng.below(4)) {
                let mut m = Vec::new();
                for v in 0..n {
                    if rng.chance(2, 5) {
                        m.push((v, 1));
                    }
                }
                if !m.is_empty() {
                    gens.push(Monomial::from_exps(m));
                }
            }
            let i = MonomialIdeal::new(vars, gens).unwrap();
            if i.is_zero() {
                continue;
            }
            let d = alexander_dual_checked(&i).unwrap();
            let dd = alexander_dual_checked(&d).unwrap();
            assert_eq!(dd, i);
        }
    }
}
