//! Finite posets with labeled elements.
//!
//! A poset is stored as its element list plus cover relations; the full
//! order relation is the reflexive-transitive closure of the covers.
//! Constructors cover chains, antichains, products, opposites, disjoint
//! unions and a few named shapes used throughout the test catalog.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::{Error, Result};

#[derive(Clone)]
pub struct Poset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    /// up[i] = { j : i <= j }, including i itself.
    up: Vec<Bits>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.up == other.up
    }
}
impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({} elements; covers ", self.elements.len())?;
        let cs: Vec<String> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.elements[a], self.elements[b]))
            .collect();
        write!(f, "{{{}}})", cs.join(", "))
    }
}

/// JSON form: `{"elements": [..], "covers": [[a,b], ..]}` with a covered by b.
#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

impl Poset {
    /// Build a poset from element labels and cover pairs `(a, b)` meaning a < b.
    pub fn from_covers(elements: Vec<String>, covers: Vec<(String, String)>) -> Result<Poset> {
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if e.is_empty() || e.contains(char::is_whitespace) {
                return Err(Error::Invalid(format!("bad element label {e:?}")));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(e.clone()));
            }
        }
        let mut cov = Vec::with_capacity(covers.len());
        for (a, b) in &covers {
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownElement(a.clone()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownElement(b.clone()))?;
            if ia == ib {
                return Err(Error::CyclicCovers {
                    cycle: vec![a.clone()],
                });
            }
            cov.push((ia, ib));
        }
        Self::from_cover_indices(elements, index, cov)
    }

    fn from_cover_indices(
        elements: Vec<String>,
        index: HashMap<String, usize>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Poset> {
        let n = elements.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            adj[a].push(b);
        }
        // Cycle check by Kahn's algorithm; any leftover vertices lie on a cycle.
        let mut indeg = vec![0usize; n];
        for &(_, b) in &covers {
            indeg[b] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        let mut qi = 0;
        while qi < queue.len() {
            let v = queue[qi];
            qi += 1;
            seen += 1;
            for &w in &adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if seen != n {
            let cycle = Self::find_cycle(n, &adj, &indeg, &elements);
            return Err(Error::CyclicCovers { cycle });
        }
        // Transitive closure along reverse topological order.
        let mut up: Vec<Bits> = (0..n).map(|i| Bits::from_indices(n, [i])).collect();
        for &v in queue.iter().rev() {
            let mut acc = up[v].clone();
            for &w in &adj[v] {
                acc.union_with(&up[w]);
            }
            up[v] = acc;
        }
        Ok(Poset {
            elements,
            index,
            covers,
            up,
        })
    }

    fn find_cycle(n: usize, adj: &[Vec<usize>], indeg: &[usize], labels: &[String]) -> Vec<String> {
        // Walk forward inside the set of vertices with positive in-degree until
        // a vertex repeats; the tail from its first occurrence is a cycle.
        let start = (0..n).find(|&i| indeg[i] > 0).unwrap();
        let mut path = vec![start];
        let mut pos = HashMap::new();
        pos.insert(start, 0usize);
        let mut cur = start;
        loop {
            let next = *adj[cur]
                .iter()
                .find(|&&w| indeg[w] > 0)
                .expect("cycle vertex with no successor in cycle set");
            if let Some(&p) = pos.get(&next) {
                return path[p..].iter().map(|&i| labels[i].clone()).collect();
            }
            pos.insert(next, path.len());
            path.push(next);
            cur = next;
        }
    }

    /// The chain 1 < 2 < ... < n.
    pub fn chain(n: usize) -> Poset {
        assert!(n >= 1, "chain needs at least one element");
        let elements: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let covers = (1..n).map(|i| (i.to_string(), (i + 1).to_string())).collect();
        Poset::from_covers(elements, covers).unwrap()
    }

    /// The antichain on n pairwise incomparable elements.
    pub fn antichain(n: usize) -> Poset {
        assert!(n >= 1, "antichain needs at least one element");
        let elements: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Poset::from_covers(elements, Vec::new()).unwrap()
    }

    /// Componentwise-ordered product; labels are `(a,b)`, left factor outer.
    pub fn product(a: &Poset, b: &Poset) -> Poset {
        let mut elements = Vec::with_capacity(a.len() * b.len());
        for la in &a.elements {
            for lb in &b.elements {
                elements.push(format!("({},{})", la, lb));
            }
        }
        let mut covers = Vec::new();
        for (i, la) in a.elements.iter().enumerate() {
            for (j, lb) in b.elements.iter().enumerate() {
                for &(x, y) in &a.covers {
                    if x == i {
                        covers.push((
                            format!("({},{})", la, lb),
                            format!("({},{})", a.elements[y], lb),
                        ));
                    }
                }
                for &(x, y) in &b.covers {
                    if x == j {
                        covers.push((
                            format!("({},{})", la, lb),
                            format!("({},{})", la, b.elements[y]),
                        ));
                    }
                }
            }
        }
        Poset::from_covers(elements, covers).unwrap()
    }

    /// Same elements with all comparisons reversed.
    pub fn opposite(&self) -> Poset {
        let covers = self
            .covers
            .iter()
            .map(|&(a, b)| (self.elements[b].clone(), self.elements[a].clone()))
            .collect();
        Poset::from_covers(self.elements.clone(), covers).unwrap()
    }

    /// Disjoint union; part k (1-based) relabels its elements as `k:label`.
    pub fn disjoint_union(parts: &[&Poset]) -> Poset {
        let mut elements = Vec::new();
        let mut covers = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            let tag = |l: &str| format!("{}:{}", k + 1, l);
            for e in &p.elements {
                elements.push(tag(e));
            }
            for &(a, b) in &p.covers {
                covers.push((tag(&p.elements[a]), tag(&p.elements[b])));
            }
        }
        Poset::from_covers(elements, covers).unwrap()
    }

    /// Build from an explicit order relation; covers are recovered by
    /// transitive reduction. `leq(i, j)` must be a partial order on indices.
    pub fn from_leq(elements: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let n = elements.len();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(i, j) {
                    let direct = (0..n)
                        .all(|k| k == i || k == j || !(leq(i, k) && leq(k, j)));
                    if direct {
                        covers.push((elements[i].clone(), elements[j].clone()));
                    }
                }
            }
        }
        let p = Poset::from_covers(elements, covers)?;
        for i in 0..n {
            for j in 0..n {
                if p.leq(i, j) != (i == j || leq(i, j)) {
                    return Err(Error::Invalid(
                        "relation is not a partial order".to_string(),
                    ));
                }
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn idx(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub fn up_set(&self, i: usize) -> &Bits {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> Bits {
        Bits::from_indices(self.len(), (0..self.len()).filter(|&j| self.leq(j, i)))
    }

    /// Downward closure of a set of elements.
    pub fn downward_closure(&self, set: &Bits) -> Bits {
        let mut out = Bits::new(self.len());
        for g in set.iter() {
            out.union_with(&self.down_set(g));
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.less(j, i)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.less(i, j)))
            .collect()
    }

    pub fn unique_min(&self) -> Option<usize> {
        let m = self.minimal_elements();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    pub fn unique_max(&self) -> Option<usize> {
        let m = self.maximal_elements();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    /// Total order check; when true the element at rank k is
    /// `linear_extension()[k]`.
    pub fn is_total_order(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.comparable(i, j)))
    }

    /// Deterministic linear extension (Kahn's algorithm, smallest index first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .find(|&i| {
                    !placed[i] && (0..n).all(|j| placed[j] || !self.less(j, i))
                })
                .expect("acyclic poset always has a minimal element");
            placed[next] = true;
            out.push(next);
        }
        out
    }

    /// Rank of each element inside the fixed linear extension.
    pub fn extension_rank(&self) -> Vec<usize> {
        let ext = self.linear_extension();
        let mut rank = vec![0; self.len()];
        for (r, &e) in ext.iter().enumerate() {
            rank[e] = r;
        }
        rank
    }

    /// Maximum size of a set of pairwise incomparable elements, by
    /// branch-and-bound over the comparability graph.
    pub fn max_antichain(&self) -> usize {
        let n = self.len();
        let comp: Vec<Bits> = (0..n)
            .map(|i| {
                Bits::from_indices(
                    n,
                    (0..n).filter(|&j| j != i && self.comparable(i, j)),
                )
            })
            .collect();
        fn go(next: usize, chosen: usize, blocked: &Bits, comp: &[Bits], best: &mut usize) {
            let n = comp.len();
            if chosen + (n - next) <= *best {
                return;
            }
            if next == n {
                *best = (*best).max(chosen);
                return;
            }
            if !blocked.contains(next) {
                let mut b = blocked.clone();
                b.union_with(&comp[next]);
                go(next + 1, chosen + 1, &b, comp, best);
            }
            go(next + 1, chosen, blocked, comp, best);
        }
        let mut best = 0;
        go(0, 0, &Bits::new(n), &comp, &mut best);
        best
    }

    pub fn to_json(&self) -> String {
        let j = PosetJson {
            elements: self.elements.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<Poset> {
        let j: PosetJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("poset json: {e}")))?;
        Poset::from_covers(j.elements, j.covers)
    }
}

/// Named catalog shapes. V is a < b, a < c; lambda is its opposite
/// (b < a, c < a); diamond is 0 < l,r < 1.
pub fn named_poset(name: &str) -> Option<Poset> {
    let p = match name {
        "v" | "V" => Poset::from_covers(
            vec!["a".into(), "b".into(), "c".into()],
            vec![("a".into(), "b".into()), ("a".into(), "c".into())],
        )
        .unwrap(),
        "lambda" | "Lambda" => Poset::from_covers(
            vec!["a".into(), "b".into(), "c".into()],
            vec![("b".into(), "a".into()), ("c".into(), "a".into())],
        )
        .unwrap(),
        "diamond" => Poset::from_covers(
            vec!["0".into(), "l".into(), "r".into(), "1".into()],
            vec![
                ("0".into(), "l".into()),
                ("0".into(), "r".into()),
                ("l".into(), "1".into()),
                ("r".into(), "1".into()),
            ],
        )
        .unwrap(),
        _ => return None,
    };
    Some(p)
}

/// Parse a constructor expression:
/// `chain:n`, `antichain:n`, `prod(E,E)`, `op(E)`, `union(E,E)`,
/// `file:path.json`, or a named shape (`v`, `lambda`, `diamond`).
pub fn parse_poset_expr(expr: &str) -> Result<Poset> {
    let expr = expr.trim();
    if let Some(rest) = expr.strip_prefix("chain:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad chain size {rest:?}")))?;
        if n == 0 {
            return Err(Error::Parse("chain size must be >= 1".into()));
        }
        return Ok(Poset::chain(n));
    }
    if let Some(rest) = expr.strip_prefix("antichain:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad antichain size {rest:?}")))?;
        if n == 0 {
            return Err(Error::Parse("antichain size must be >= 1".into()));
        }
        return Ok(Poset::antichain(n));
    }
    if let Some(rest) = expr.strip_prefix("file:") {
        let text = std::fs::read_to_string(rest)?;
        return Poset::from_json(&text);
    }
    if let Some(inner) = strip_call(expr, "prod") {
        let (a, b) = split_two(inner)?;
        return Ok(Poset::product(&parse_poset_expr(a)?, &parse_poset_expr(b)?));
    }
    if let Some(inner) = strip_call(expr, "union") {
        let (a, b) = split_two(inner)?;
        return Ok(Poset::disjoint_union(&[
            &parse_poset_expr(a)?,
            &parse_poset_expr(b)?,
        ]));
    }
    if let Some(inner) = strip_call(expr, "op") {
        return Ok(parse_poset_expr(inner)?.opposite());
    }
    named_poset(expr).ok_or_else(|| Error::Parse(format!("unknown poset expression {expr:?}")))
}

fn strip_call<'a>(expr: &'a str, name: &str) -> Option<&'a str> {
    expr.strip_prefix(name)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
}

/// Split `a,b` at the top-level comma (arguments may nest parentheses).
fn split_two(inner: &str) -> Result<(&str, &str)> {
    let mut depth = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    Err(Error::Parse(format!("expected two arguments in {inner:?}")))
}
