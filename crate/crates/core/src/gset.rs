//! Finite G-sets with orbit, stabilizer and isomorphism machinery.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};

pub type Point = u32;

type ActFn = dyn Fn(Elem, Point) -> Point + Send + Sync;

/// Default cap on the number of points built by product-like constructions.
pub const DEFAULT_MAX_POINTS: usize = 1_000_000;

/// A left action of a subgroup on `{0, .., size-1}`.
///
/// The action is stored as a function of element ids so that products,
/// restrictions and conjugates are free to build.
#[derive(Clone)]
pub struct GAction {
    group: Subgroup,
    size: usize,
    act: Arc<ActFn>,
}

impl fmt::Debug for GAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GAction({} points, group {:?})", self.size, self.group)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Keeps the smaller root, so every root is the minimum of its class.
    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb as usize] = ra;
        } else if rb < ra {
            self.parent[ra as usize] = rb;
        }
    }

    /// Dense labels of the classes, ordered by minimal member, plus the class count.
    pub(crate) fn labels(&mut self) -> (Vec<u32>, usize) {
        let n = self.parent.len();
        let mut label = vec![u32::MAX; n];
        let mut count = 0u32;
        for x in 0..n as u32 {
            let r = self.find(x);
            if label[r as usize] == u32::MAX {
                label[r as usize] = count;
                count += 1;
            }
            label[x as usize] = label[r as usize];
        }
        (label, count as usize)
    }
}

pub(crate) fn check_points(what: &str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeLimit { what: what.to_string(), size, cap })
    } else {
        Ok(())
    }
}

impl GAction {
    pub(crate) fn from_fn<F>(group: &Subgroup, size: usize, f: F) -> GAction
    where
        F: Fn(Elem, Point) -> Point + Send + Sync + 'static,
    {
        GAction { group: group.clone(), size, act: Arc::new(f) }
    }

    /// An action given by `table[i][x]`, the image of `x` under the `i`-th
    /// element of `group`. The action laws are checked.
    pub fn from_table(group: &Subgroup, size: usize, table: Vec<Vec<Point>>) -> Result<GAction> {
        if table.len() != group.order() || table.iter().any(|r| r.len() != size) {
            return Err(Error::Action("table shape does not match group order and size".into()));
        }
        let flat: Vec<Point> = table.into_iter().flatten().collect();
        if flat.iter().any(|&y| y as usize >= size) {
            return Err(Error::Action("point out of range".into()));
        }
        let a = Self::from_flat(group, size, flat);
        a.check_laws()?;
        Ok(a)
    }

    pub(crate) fn from_flat(group: &Subgroup, size: usize, flat: Vec<Point>) -> GAction {
        let g = group.clone();
        Self::from_fn(group, size, move |e, x| flat[g.position(e).expect("element of acting group") * size + x as usize])
    }

    /// Verifies that the identity acts trivially and `(gs)x = g(sx)` for
    /// all `g`, all points and all generators `s`.
    pub fn check_laws(&self) -> Result<()> {
        let amb = self.group.ambient();
        for x in 0..self.size as Point {
            if self.act(amb.identity(), x) != x {
                return Err(Error::Action(format!("identity moves point {x}")));
            }
        }
        for &s in self.group.generators() {
            for &g in self.group.elements() {
                let gs = amb.mul(g, s);
                for x in 0..self.size as Point {
                    let y = self.act(gs, x);
                    if y as usize >= self.size || y != self.act(g, self.act(s, x)) {
                        return Err(Error::Action(format!(
                            "compatibility fails for {} and {} at point {x}",
                            amb.label(g),
                            amb.label(s)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: Elem, x: Point) -> Point {
        (self.act)(g, x)
    }

    /// Caches the full action table. Useful before repeated use of a
    /// composite action.
    pub fn materialize(&self) -> GAction {
        let n = self.size;
        let mut flat = Vec::with_capacity(self.group.order() * n);
        for &g in self.group.elements() {
            for x in 0..n as Point {
                flat.push(self.act(g, x));
            }
        }
        Self::from_flat(&self.group, n, flat)
    }

    pub fn trivial(group: &Subgroup, n: usize) -> GAction {
        Self::from_fn(group, n, |_, x| x)
    }

    /// Left translation on the left cosets `gS`, ordered by smallest element.
    pub fn coset_action(group: &Subgroup, s: &Subgroup) -> Result<GAction> {
        if !s.is_subgroup_of(group) {
            return Err(Error::NotASubgroup("coset action: stabilizer not inside the group".into()));
        }
        let cosets = group.left_cosets(s);
        let mut coset_of = vec![0 as Point; group.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[group.position(x).unwrap()] = i as Point;
            }
        }
        let reps: Vec<Elem> = cosets.iter().map(|c| c[0]).collect();
        let g = group.clone();
        let amb = group.ambient().clone();
        Ok(Self::from_fn(group, cosets.len(), move |e, x| {
            coset_of[g.position(amb.mul(e, reps[x as usize])).expect("element of acting group")]
        }))
    }

    pub fn regular(group: &Subgroup) -> GAction {
        Self::coset_action(group, &Subgroup::trivial(group.ambient())).expect("trivial subgroup")
    }

    /// The natural action of a permutation group on its moved points.
    pub fn natural(group: &Subgroup) -> Result<GAction> {
        let amb = group.ambient().clone();
        if amb.permutation(amb.identity()).is_none() {
            return Err(Error::Action("group has no permutation labels".into()));
        }
        let n = group.elements().iter().map(|&g| amb.permutation(g).unwrap().degree()).max().unwrap_or(0);
        Ok(Self::from_fn(group, n, move |g, x| amb.permutation(g).unwrap().apply(x)))
    }

    pub fn disjoint_union(&self, other: &GAction) -> Result<GAction> {
        if self.group != other.group {
            return Err(Error::AmbientMismatch("disjoint union of actions of different groups".into()));
        }
        let (a, b) = (self.clone(), other.clone());
        let n = self.size as Point;
        Ok(Self::from_fn(&self.group, self.size + other.size, move |g, x| {
            if x < n {
                a.act(g, x)
            } else {
                n + b.act(g, x - n)
            }
        }))
    }

    /// `A x B` as a set for the product of the two acting groups; the point
    /// `(u, v)` has id `u * |B| + v`.
    pub fn product(&self, other: &GAction) -> GAction {
        let group = self.group.product(&other.group);
        let amb = group.ambient().clone();
        let (a, b) = (self.clone(), other.clone());
        let m = other.size as Point;
        Self::from_fn(&group, self.size * other.size, move |z, x| {
            let (g, h) = amb.split(z);
            a.act(g, x / m) * m + b.act(h, x % m)
        })
    }

    pub fn restrict(&self, s: &Subgroup) -> Result<GAction> {
        if !s.is_subgroup_of(&self.group) {
            return Err(Error::NotASubgroup("restriction to a non-subgroup".into()));
        }
        Ok(GAction { group: s.clone(), size: self.size, act: self.act.clone() })
    }

    /// The conjugate set `^c A` for the group `c S c^-1`, with
    /// `g . x = (c^-1 g c) x`.
    pub fn conjugate(&self, c: Elem) -> GAction {
        let amb = self.group.ambient().clone();
        let group = self.group.conjugate(c);
        let a = self.clone();
        let ci = amb.inv(c);
        Self::from_fn(&group, self.size, move |g, x| a.act(amb.mul(amb.mul(ci, g), c), x))
    }

    /// `Ind_S^G A`: points are pairs (left coset `tS`, point), with `t` the
    /// smallest element of its coset; the point `(i, x)` has id `i * |A| + x`.
    pub fn induce(&self, g: &Subgroup) -> Result<GAction> {
        let s = &self.group;
        if !s.is_subgroup_of(g) {
            return Err(Error::NotASubgroup("induction from a non-subgroup".into()));
        }
        let amb = g.ambient().clone();
        let cosets = g.left_cosets(s);
        let mut coset_of = vec![0 as Point; g.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[g.position(x).unwrap()] = i as Point;
            }
        }
        let reps: Vec<Elem> = cosets.iter().map(|c| c[0]).collect();
        let rep_inv: Vec<Elem> = reps.iter().map(|&t| amb.inv(t)).collect();
        let n = self.size as Point;
        check_points("induced set", cosets.len() * self.size, DEFAULT_MAX_POINTS)?;
        let a = self.clone();
        let gg = g.clone();
        Ok(Self::from_fn(g, cosets.len() * self.size, move |e, p| {
            let (i, x) = (p / n, p % n);
            let y = amb.mul(e, reps[i as usize]);
            let j = coset_of[gg.position(y).expect("element of acting group")];
            let s = amb.mul(rep_inv[j as usize], y);
            j * n + a.act(s, x)
        }))
    }

    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut uf = UnionFind::new(self.size);
        for &s in self.group.generators() {
            for x in 0..self.size as Point {
                uf.union(x, self.act(s, x));
            }
        }
        let (label, count) = uf.labels();
        let mut out = vec![Vec::new(); count];
        for (x, &l) in label.iter().enumerate() {
            out[l as usize].push(x as Point);
        }
        out
    }

    pub fn stabilizer(&self, x: Point) -> Subgroup {
        let elems = self.group.elements().iter().copied().filter(|&g| self.act(g, x) == x).collect();
        Subgroup::from_elements_unchecked(self.group.ambient(), elems)
    }

    pub fn fixed_points(&self, g: Elem) -> usize {
        (0..self.size as Point).filter(|&x| self.act(g, x) == x).count()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn decompose(&self) -> TransitiveDecomposition {
        let mut cache: HashMap<Vec<Elem>, Subgroup> = HashMap::new();
        let mut counts: HashMap<Subgroup, usize> = HashMap::new();
        for orbit in self.orbits() {
            let stab = self.stabilizer(orbit[0]);
            let canon = cache
                .entry(stab.elements().to_vec())
                .or_insert_with(|| min_conjugate(&self.group, &stab))
                .clone();
            *counts.entry(canon).or_default() += 1;
        }
        TransitiveDecomposition::from_counts(&self.group, counts)
    }

    pub fn is_isomorphic(&self, other: &GAction) -> Result<bool> {
        iso_check(self, other)
    }
}

/// The conjugate of `s` by an element of `g` whose sorted element list is
/// lexicographically smallest.
pub fn min_conjugate(g: &Subgroup, s: &Subgroup) -> Subgroup {
    let amb = g.ambient();
    let n = g.normalizer(s);
    let mut best: Option<Vec<Elem>> = None;
    for coset in g.left_cosets(&n) {
        let t = coset[0];
        let mut c: Vec<Elem> = s.elements().iter().map(|&x| amb.conj(t, x)).collect();
        c.sort_unstable();
        if best.as_ref().map_or(true, |b| c < *b) {
            best = Some(c);
        }
    }
    Subgroup::from_elements_unchecked(amb, best.expect("at least one coset"))
}

/// A G-set up to isomorphism: canonical stabilizer representatives of the
/// orbits with multiplicities, sorted by (order, elements).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitiveDecomposition {
    group: Subgroup,
    parts: Vec<(Subgroup, usize)>,
}

impl TransitiveDecomposition {
    pub(crate) fn from_counts(group: &Subgroup, counts: HashMap<Subgroup, usize>) -> Self {
        let mut parts: Vec<(Subgroup, usize)> = counts.into_iter().filter(|(_, m)| *m > 0).collect();
        parts.sort_by(|a, b| (a.0.order(), a.0.elements()).cmp(&(b.0.order(), b.0.elements())));
        TransitiveDecomposition { group: group.clone(), parts }
    }

    /// Builds a decomposition from stabilizers (any representatives).
    pub fn from_stabilizers(group: &Subgroup, stabs: impl IntoIterator<Item = Subgroup>) -> Self {
        let mut counts: HashMap<Subgroup, usize> = HashMap::new();
        for s in stabs {
            *counts.entry(min_conjugate(group, &s)).or_default() += 1;
        }
        Self::from_counts(group, counts)
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn parts(&self) -> &[(Subgroup, usize)] {
        &self.parts
    }

    pub fn num_orbits(&self) -> usize {
        self.parts.iter().map(|(_, m)| m).sum()
    }

    /// Total number of points, `sum m [G:S]`.
    pub fn total_size(&self) -> usize {
        self.parts.iter().map(|(s, m)| m * self.group.order() / s.order()).sum()
    }

    /// Short textual fingerprint such as `1x[6] 2x[2]`, listing stabilizer orders.
    pub fn summary(&self) -> String {
        self.parts.iter().map(|(s, m)| format!("{m}x[{}]", s.order())).collect::<Vec<_>>().join(" ")
    }
}

/// Isomorphism of G-sets for the same acting group, decided by orbit
/// stabilizer classes.
pub fn iso_check(a: &GAction, b: &GAction) -> Result<bool> {
    if a.group != b.group {
        return Err(Error::AmbientMismatch("isomorphism test between actions of different groups".into()));
    }
    if a.size != b.size {
        return Ok(false);
    }
    Ok(a.decompose() == b.decompose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn coset_actions() {
        let g = symmetric(3);
        let full = Subgroup::full(&g);
        assert_eq!(GAction::coset_action(&full, &full).unwrap().size(), 1);
        let reg = GAction::regular(&full);
        assert_eq!(reg.size(), 6);
        assert!(reg.is_transitive());
        assert!(reg.stabilizer(0).is_trivial());
        let c2 = full.p_subgroups(2).pop().unwrap();
        let a = GAction::coset_action(&full, &c2).unwrap();
        assert_eq!(a.size(), 3);
        a.check_laws().unwrap();
        assert_eq!(a.stabilizer(0), c2);
    }

    #[test]
    fn ordered_pairs_of_three_points() {
        let g = symmetric(3);
        let full = Subgroup::full(&g);
        let nat = GAction::natural(&full).unwrap();
        let pairs = GAction::from_fn(&full, 9, move |e, x| nat.act(e, x / 3) * 3 + nat.act(e, x % 3));
        pairs.check_laws().unwrap();
        let mut sizes: Vec<usize> = pairs.orbits().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 6]);
        for x in 0..9 {
            let orbit = pairs.orbits().into_iter().find(|o| o.contains(&x)).unwrap();
            assert_eq!(orbit.len() * pairs.stabilizer(x).order(), 6);
        }
    }

    #[test]
    fn trivial_action_orbits() {
        let full = Subgroup::full(&cyclic(4));
        let t = GAction::trivial(&full, 5);
        assert_eq!(t.orbits().len(), 5);
        assert!(t.stabilizer(2).is_full());
        let reg = GAction::regular(&full);
        let triv = GAction::trivial(&full, 4);
        assert!(!iso_check(&reg, &triv).unwrap());
        assert!(iso_check(&reg, &reg).unwrap());
    }

    #[test]
    fn induction_of_regular_is_regular() {
        let g = symmetric(3);
        let full = Subgroup::full(&g);
        let c3 = full.sylow(3);
        let ind = GAction::regular(&c3).induce(&full).unwrap();
        ind.check_laws().unwrap();
        assert!(iso_check(&ind, &GAction::regular(&full)).unwrap());
        let triv = GAction::trivial(&c3, 1).induce(&full).unwrap();
        assert!(iso_check(&triv, &GAction::coset_action(&full, &c3).unwrap()).unwrap());
    }

    #[test]
    fn conjugate_action_stabilizers() {
        let g = symmetric(3);
        let full = Subgroup::full(&g);
        let c2 = full.p_subgroups(2).pop().unwrap();
        let a = GAction::trivial(&c2, 1);
        let c = g.elements().find(|&x| !c2.contains(x)).unwrap();
        let ca = a.conjugate(c);
        assert_eq!(*ca.group(), c2.conjugate(c));
        ca.check_laws().unwrap();
    }

    #[test]
    fn disjoint_union_adds_orbits() {
        let full = Subgroup::full(&symmetric(3));
        let a = GAction::regular(&full);
        let b = GAction::trivial(&full, 2);
        let u = a.disjoint_union(&b).unwrap();
        u.check_laws().unwrap();
        assert_eq!(u.decompose().num_orbits(), 3);
        assert_eq!(u.decompose().total_size(), 8);
    }
}
