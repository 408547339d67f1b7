//! Isotone maps between posets, the poset Hom(Q,P) of all of them, and
//! poset ideals (downsets) inside it.
//!
//! Hom-posets are enumerated by backtracking over a fixed linear extension
//! of the source, so the `maps` list is lexicographic in that extension and
//! every run produces the same order.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::Bits;
use crate::poset::Poset;
use crate::{Error, Result};

/// Default cap on the number of maps a Hom-poset may contain.
pub const DEFAULT_HOM_CAP: usize = 50_000;

#[derive(Clone, PartialEq, Eq)]
pub struct IsotoneMap {
    pub domain: Arc<Poset>,
    pub codomain: Arc<Poset>,
    assignment: Vec<usize>,
}

impl std::fmt::Debug for IsotoneMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.bracket_label())
    }
}

impl IsotoneMap {
    pub fn new(domain: Arc<Poset>, codomain: Arc<Poset>, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != domain.len() {
            return Err(Error::Invalid("assignment length mismatch".into()));
        }
        for &v in &assignment {
            if v >= codomain.len() {
                return Err(Error::Invalid("assignment target out of range".into()));
            }
        }
        for i in 0..domain.len() {
            for j in 0..domain.len() {
                if domain.leq(i, j) && !codomain.leq(assignment[i], assignment[j]) {
                    return Err(Error::Invalid(format!(
                        "map is not isotone at {} <= {}",
                        domain.label(i),
                        domain.label(j)
                    )));
                }
            }
        }
        Ok(IsotoneMap {
            domain,
            codomain,
            assignment,
        })
    }

    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// The graph { (q, f(q)) } as index pairs.
    pub fn graph(&self) -> Vec<(usize, usize)> {
        self.assignment.iter().copied().enumerate().collect()
    }

    pub fn leq_pointwise(&self, other: &IsotoneMap) -> bool {
        self.assignment
            .iter()
            .zip(&other.assignment)
            .all(|(&a, &b)| self.codomain.leq(a, b))
    }

    /// Serialized label `[v1,...,vk]` listing codomain labels in domain order.
    pub fn bracket_label(&self) -> String {
        let vals: Vec<&str> = self
            .assignment
            .iter()
            .map(|&v| self.codomain.label(v))
            .collect();
        format!("[{}]", vals.join(","))
    }
}

/// The poset of all (optionally strict) isotone maps source -> target under
/// the pointwise order.
#[derive(Clone)]
pub struct HomPoset {
    pub source: Arc<Poset>,
    pub target: Arc<Poset>,
    pub strict: bool,
    maps: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl PartialEq for HomPoset {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.strict == other.strict
            && self.maps == other.maps
    }
}
impl Eq for HomPoset {}

impl std::fmt::Debug for HomPoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HomPoset({} maps)", self.maps.len())
    }
}

pub fn hom_poset(source: &Poset, target: &Poset, strict: bool) -> Result<HomPoset> {
    hom_poset_capped(source, target, strict, DEFAULT_HOM_CAP)
}

pub fn hom_poset_capped(
    source: &Poset,
    target: &Poset,
    strict: bool,
    cap: usize,
) -> Result<HomPoset> {
    if source.is_empty() || target.is_empty() {
        return Err(Error::Invalid("hom poset needs nonempty posets".into()));
    }
    let ext = source.linear_extension();
    let n = source.len();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut partial = vec![usize::MAX; n];
    // Depth-first over the extension; values tried in target index order, so
    // the output is lexicographic along the extension.
    #[allow(clippy::too_many_arguments)]
    fn go(
        depth: usize,
        ext: &[usize],
        source: &Poset,
        target: &Poset,
        strict: bool,
        partial: &mut Vec<usize>,
        maps: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if depth == ext.len() {
            if maps.len() >= cap {
                return Err(Error::HomTooLarge { cap });
            }
            maps.push(partial.clone());
            return Ok(());
        }
        let e = ext[depth];
        'next_value: for v in 0..target.len() {
            for &q in &ext[..depth] {
                if source.less(q, e) {
                    let ok = if strict {
                        target.less(partial[q], v)
                    } else {
                        target.leq(partial[q], v)
                    };
                    if !ok {
                        continue 'next_value;
                    }
                }
            }
            partial[e] = v;
            go(depth + 1, ext, source, target, strict, partial, maps, cap)?;
            partial[e] = usize::MAX;
        }
        Ok(())
    }
    go(
        0,
        &ext,
        source,
        target,
        strict,
        &mut partial,
        &mut maps,
        cap,
    )?;
    let lookup = maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    Ok(HomPoset {
        source: Arc::new(source.clone()),
        target: Arc::new(target.clone()),
        strict,
        maps,
        lookup,
    })
}

impl HomPoset {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn map(&self, i: usize) -> IsotoneMap {
        IsotoneMap {
            domain: Arc::clone(&self.source),
            codomain: Arc::clone(&self.target),
            assignment: self.maps[i].clone(),
        }
    }

    pub fn assignments(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn find(&self, assignment: &[usize]) -> Option<usize> {
        self.lookup.get(assignment).copied()
    }

    /// Pointwise order on maps by index.
    pub fn leq_maps(&self, i: usize, j: usize) -> bool {
        self.maps[i]
            .iter()
            .zip(&self.maps[j])
            .all(|(&a, &b)| self.target.leq(a, b))
    }

    /// The weaker order of the certificate machinery relative to a
    /// distinguished element p of the source: phi <=_w psi iff
    /// phi(q) <= psi(q) for q != p and phi(p) = psi(p).
    pub fn weak_leq_maps(&self, i: usize, j: usize, p: usize) -> bool {
        self.maps[i][p] == self.maps[j][p]
            && self.maps[i]
                .iter()
                .zip(&self.maps[j])
                .enumerate()
                .all(|(q, (&a, &b))| q == p || self.target.leq(a, b))
    }

    /// The Hom-poset itself as a `Poset`, elements labeled `[v1,...,vk]`.
    pub fn as_poset(&self) -> Poset {
        let labels: Vec<String> = (0..self.len()).map(|i| self.map(i).bracket_label()).collect();
        Poset::from_leq(labels, |i, j| self.leq_maps(i, j))
            .expect("pointwise order is a partial order")
    }
}

/// Order mode for poset ideals in a Hom-poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderMode {
    Full,
    /// Weak order relative to a distinguished maximal source element.
    Weak(usize),
}

/// A poset ideal (downset) inside a Hom-poset.
#[derive(Clone, Debug)]
pub struct HomIdeal {
    pub ambient: Arc<HomPoset>,
    pub mode: OrderMode,
    members: Vec<usize>,
    member_set: Bits,
}

impl PartialEq for HomIdeal {
    fn eq(&self, other: &Self) -> bool {
        *self.ambient == *other.ambient && self.mode == other.mode && self.members == other.members
    }
}

/// Downward closure of the given generator maps under the selected order.
pub fn downset(ambient: Arc<HomPoset>, gens: &[usize], mode: OrderMode) -> Result<HomIdeal> {
    for &g in gens {
        if g >= ambient.len() {
            return Err(Error::Invalid(format!(
                "generator index {g} outside Hom-poset of size {}",
                ambient.len()
            )));
        }
    }
    if let OrderMode::Weak(p) = mode {
        if p >= ambient.source.len() {
            return Err(Error::Invalid("weak-order element out of range".into()));
        }
        if !ambient.source.maximal_elements().contains(&p) {
            return Err(Error::Invalid(format!(
                "weak-order element {} is not maximal in the source",
                ambient.source.label(p)
            )));
        }
    }
    let mut member_set = Bits::new(ambient.len());
    for m in 0..ambient.len() {
        let below = gens.iter().any(|&g| match mode {
            OrderMode::Full => ambient.leq_maps(m, g),
            OrderMode::Weak(p) => ambient.weak_leq_maps(m, g, p),
        });
        if below {
            member_set.insert(m);
        }
    }
    let members = member_set.to_vec();
    Ok(HomIdeal {
        ambient,
        mode,
        members,
        member_set,
    })
}

impl HomIdeal {
    /// The full Hom-poset as an ideal.
    pub fn all(ambient: Arc<HomPoset>) -> HomIdeal {
        let members: Vec<usize> = (0..ambient.len()).collect();
        let member_set = Bits::full(ambient.len());
        HomIdeal {
            ambient,
            mode: OrderMode::Full,
            members,
            member_set,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.member_set.contains(i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.ambient.len()
    }

    /// Complement within the ambient Hom-poset.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ambient.len())
            .filter(|&i| !self.member_set.contains(i))
            .collect()
    }
}

/// A fixpoint of an isotone endomap of a finite poset with a unique minimal
/// or maximal element, found by iterating from that extremal element.
pub fn fixpoint(f: &IsotoneMap) -> Result<usize> {
    if f.domain != f.codomain {
        return Err(Error::Invalid("fixpoint needs an endomap".into()));
    }
    let p = &f.domain;
    let start = p.unique_min().or_else(|| p.unique_max()).ok_or_else(|| {
        Error::Invalid("poset has neither a unique minimal nor a unique maximal element".into())
    })?;
    let mut cur = start;
    for _ in 0..=p.len() {
        let next = f.apply(cur);
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::Bug(
        "isotone endomap iteration failed to stabilize".into(),
    ))
}

/// Curry f : Q x P -> R into Q -> Hom(P,R). The domain of `f` must be the
/// product of the supplied factors; the returned map lands in the Hom-poset
/// realized as a poset (elements labeled by the maps).
pub fn curry(f: &IsotoneMap, q: &Poset, p: &Poset) -> Result<(IsotoneMap, HomPoset)> {
    let prod = Poset::product(q, p);
    if *f.domain != prod {
        return Err(Error::AmbientMismatch(
            "curry: domain is not the declared product".into(),
        ));
    }
    let inner = hom_poset(p, &f.codomain, false)?;
    let inner_poset = Arc::new(inner.as_poset());
    let mut assignment = Vec::with_capacity(q.len());
    for qi in 0..q.len() {
        let slice: Vec<usize> = (0..p.len()).map(|pj| f.apply(qi * p.len() + pj)).collect();
        let idx = inner.find(&slice).ok_or_else(|| {
            Error::Bug("slice of an isotone map on a product must be isotone".into())
        })?;
        assignment.push(idx);
    }
    let map = IsotoneMap::new(Arc::new(q.clone()), inner_poset, assignment)?;
    Ok((map, inner))
}

/// Inverse of `curry`: g : Q -> Hom(P,R) (codomain realized via
/// `HomPoset::as_poset`) becomes Q x P -> R.
pub fn uncurry(g: &IsotoneMap, inner: &HomPoset) -> Result<IsotoneMap> {
    let inner_poset = inner.as_poset();
    if *g.codomain != inner_poset {
        return Err(Error::AmbientMismatch(
            "uncurry: codomain is not the realized Hom-poset".into(),
        ));
    }
    let q = &g.domain;
    let p = &inner.source;
    let prod = Poset::product(q, p);
    let mut assignment = Vec::with_capacity(prod.len());
    for qi in 0..q.len() {
        let m = inner.assignments()[g.apply(qi)].clone();
        assignment.extend(m.iter().take(p.len()).copied());
    }
    IsotoneMap::new(
        Arc::new(prod),
        Arc::clone(&inner.target),
        assignment,
    )
}

/// The distributive lattice of poset ideals of P, realized as Hom(P, [2]).
pub fn d_poset(p: &Poset) -> Result<Poset> {
    Ok(hom_poset(p, &Poset::chain(2), false)?.as_poset())
}
