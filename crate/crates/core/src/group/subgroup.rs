use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use super::{Elem, FiniteGroup, GroupHom};
use crate::error::{Error, Result};

/// A subgroup of an ambient [`FiniteGroup`], stored as a sorted element list.
///
/// Cheap to clone. Generators and conjugacy classes are computed lazily.
#[derive(Clone)]
pub struct Subgroup(Arc<SubInner>);

struct SubInner {
    ambient: Arc<FiniteGroup>,
    elements: Vec<Elem>,
    full: bool,
    gens: OnceLock<Vec<Elem>>,
    classes: OnceLock<ConjugacyClasses>,
}

/// Conjugacy classes of a subgroup under its own conjugation action.
/// Classes are ordered by their smallest element, which is the representative.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<Elem>>,
    /// class index for each element, indexed by position in the subgroup
    class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn rep(&self, i: usize) -> Elem {
        self.classes[i][0]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ambient.same_as(&other.0.ambient) && self.0.elements == other.0.elements)
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.ambient.key().hash(state);
        self.0.elements.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} in {})", self.order(), self.0.ambient.name())
    }
}

impl Subgroup {
    fn from_sorted(ambient: &Arc<FiniteGroup>, elements: Vec<Elem>) -> Subgroup {
        let full = elements.len() == ambient.order();
        Subgroup(Arc::new(SubInner {
            ambient: ambient.clone(),
            elements,
            full,
            gens: OnceLock::new(),
            classes: OnceLock::new(),
        }))
    }

    /// Trusted constructor: `elements` must form a subgroup (any order, duplicates allowed).
    pub(crate) fn from_elements_unchecked(ambient: &Arc<FiniteGroup>, mut elements: Vec<Elem>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        Self::from_sorted(ambient, elements)
    }

    pub fn full(ambient: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_sorted(ambient, ambient.elements().collect())
    }

    pub fn trivial(ambient: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_sorted(ambient, vec![ambient.identity()])
    }

    /// The subgroup generated by `gens`.
    pub fn generate(ambient: &Arc<FiniteGroup>, gens: &[Elem]) -> Subgroup {
        let gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != ambient.identity()).collect();
        let mut seen = BTreeSet::from([ambient.identity()]);
        let mut queue = VecDeque::from([ambient.identity()]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = ambient.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let s = Self::from_sorted(ambient, seen.into_iter().collect());
        let _ = s.0.gens.set(gens);
        s
    }

    /// Validates that `elements` is a subgroup of `ambient`.
    pub fn from_elements(ambient: &Arc<FiniteGroup>, elements: &[Elem]) -> Result<Subgroup> {
        let set: BTreeSet<Elem> = elements.iter().copied().collect();
        if set.iter().any(|&e| e as usize >= ambient.order()) {
            return Err(Error::NotASubgroup("element id out of range".into()));
        }
        if !set.contains(&ambient.identity()) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let s = Self::from_sorted(ambient, set.into_iter().collect());
        let gens = s.generators().to_vec();
        for &g in &gens {
            for &x in s.elements() {
                if !s.contains(ambient.mul(x, g)) {
                    return Err(Error::NotASubgroup(format!(
                        "product of {} and {} leaves the set",
                        ambient.label(x),
                        ambient.label(g)
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn ambient(&self) -> &Arc<FiniteGroup> {
        &self.0.ambient
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.0.elements
    }

    pub fn is_full(&self) -> bool {
        self.0.full
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Elem {
        self.0.ambient.identity()
    }

    #[inline]
    pub fn position(&self, e: Elem) -> Option<usize> {
        if self.0.full {
            return ((e as usize) < self.order()).then_some(e as usize);
        }
        self.0.elements.binary_search(&e).ok()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.position(e).is_some()
    }

    pub fn same_ambient(&self, other: &Subgroup) -> bool {
        self.0.ambient.same_as(&other.0.ambient)
    }

    pub(crate) fn require_same_ambient(&self, other: &Subgroup, ctx: &str) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(format!(
                "{ctx}: {} vs {}",
                self.0.ambient.name(),
                other.0.ambient.name()
            )))
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_ambient(other) && self.order() <= other.order() && self.elements().iter().all(|&e| other.contains(e))
    }

    /// A small generating set, chosen greedily in element order unless the
    /// subgroup was built from generators.
    pub fn generators(&self) -> &[Elem] {
        self.0.gens.get_or_init(|| {
            let g = &self.0.ambient;
            let mut gens = Vec::new();
            let mut current: BTreeSet<Elem> = BTreeSet::from([g.identity()]);
            for &x in self.elements() {
                if current.contains(&x) {
                    continue;
                }
                gens.push(x);
                let mut queue: VecDeque<Elem> = current.iter().copied().collect();
                while let Some(y) = queue.pop_front() {
                    for &s in &gens {
                        let z = g.mul(y, s);
                        if current.insert(z) {
                            queue.push_back(z);
                        }
                    }
                }
                if current.len() == self.order() {
                    break;
                }
            }
            gens
        })
    }

    /// `g S g^-1`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let amb = &self.0.ambient;
        let elems = self.elements().iter().map(|&x| amb.conj(g, x)).collect();
        Self::from_elements_unchecked(amb, elems)
    }

    /// Elements of `self` commuting with every element of `s`.
    pub fn centralizer(&self, s: &Subgroup) -> Subgroup {
        let amb = &self.0.ambient;
        let gens = s.generators();
        let elems = self
            .elements()
            .iter()
            .copied()
            .filter(|&g| gens.iter().all(|&x| amb.mul(g, x) == amb.mul(x, g)))
            .collect();
        Self::from_sorted(amb, elems)
    }

    pub fn centralizer_of_element(&self, x: Elem) -> Subgroup {
        let amb = &self.0.ambient;
        let elems = self
            .elements()
            .iter()
            .copied()
            .filter(|&g| amb.mul(g, x) == amb.mul(x, g))
            .collect();
        Self::from_sorted(amb, elems)
    }

    /// Elements `g` of `self` with `g s g^-1 = s`.
    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let amb = &self.0.ambient;
        let gens = s.generators();
        let elems = self
            .elements()
            .iter()
            .copied()
            .filter(|&g| gens.iter().all(|&x| s.contains(amb.conj(g, x))))
            .collect();
        Self::from_sorted(amb, elems)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(self)
    }

    pub fn is_normal_in(&self, g: &Subgroup) -> bool {
        let amb = &self.0.ambient;
        let gens = self.generators();
        g.generators().iter().all(|&x| gens.iter().all(|&n| self.contains(amb.conj(x, n))))
    }

    pub fn is_abelian(&self) -> bool {
        let amb = &self.0.ambient;
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| amb.mul(a, b) == amb.mul(b, a)))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let elems = self.elements().iter().copied().filter(|&e| other.contains(e)).collect();
        Self::from_sorted(&self.0.ambient, elems)
    }

    /// The subgroup generated by `self` and `other`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators().to_vec();
        gens.extend_from_slice(other.generators());
        Self::generate(&self.0.ambient, &gens)
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.0.classes.get_or_init(|| {
            let amb = &self.0.ambient;
            let n = self.order();
            let gens = self.generators().to_vec();
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for (pos, &x) in self.elements().iter().enumerate() {
                if class_of[pos] != u32::MAX {
                    continue;
                }
                let idx = classes.len() as u32;
                class_of[pos] = idx;
                let mut class = vec![x];
                let mut queue = VecDeque::from([x]);
                while let Some(y) = queue.pop_front() {
                    for &g in &gens {
                        let z = amb.conj(g, y);
                        let zp = self.position(z).expect("conjugate stays in subgroup");
                        if class_of[zp] == u32::MAX {
                            class_of[zp] = idx;
                            class.push(z);
                            queue.push_back(z);
                        }
                    }
                }
                class.sort_unstable();
                classes.push(class);
            }
            ConjugacyClasses { classes, class_of }
        })
    }

    /// Index of the conjugacy class (of `self`) containing `e`.
    pub fn class_index(&self, e: Elem) -> usize {
        let pos = self.position(e).expect("element of subgroup");
        self.conjugacy_classes().class_of[pos] as usize
    }

    /// Left cosets `gA` of `a` in `self`, ordered by smallest element.
    pub fn left_cosets(&self, a: &Subgroup) -> Vec<Vec<Elem>> {
        let amb = &self.0.ambient;
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for (pos, &g) in self.elements().iter().enumerate() {
            if seen[pos] {
                continue;
            }
            let mut coset: Vec<Elem> = a.elements().iter().map(|&x| amb.mul(g, x)).collect();
            coset.sort_unstable();
            for &c in &coset {
                seen[self.position(c).expect("coset inside subgroup")] = true;
            }
            out.push(coset);
        }
        out
    }

    /// Representatives (smallest element) of the double cosets `A g B` in `self`.
    pub fn double_cosets(&self, a: &Subgroup, b: &Subgroup) -> Vec<Elem> {
        let amb = &self.0.ambient;
        let mut seen = vec![false; self.order()];
        let mut reps = Vec::new();
        for (pos, &g) in self.elements().iter().enumerate() {
            if seen[pos] {
                continue;
            }
            reps.push(g);
            for &x in a.elements() {
                let xg = amb.mul(x, g);
                for &y in b.elements() {
                    seen[self.position(amb.mul(xg, y)).expect("double coset inside subgroup")] = true;
                }
            }
        }
        reps
    }

    fn canonical_conjugate(&self, s: &Subgroup) -> Vec<Elem> {
        let amb = &self.0.ambient;
        let mut best = s.elements().to_vec();
        for &g in self.elements() {
            let mut c: Vec<Elem> = s.elements().iter().map(|&x| amb.conj(g, x)).collect();
            c.sort_unstable();
            if c < best {
                best = c;
            }
        }
        best
    }

    /// Whether `a` and `b` are conjugate by an element of `self`.
    pub fn are_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        if a.order() != b.order() {
            return false;
        }
        let amb = &self.0.ambient;
        self.elements()
            .iter()
            .any(|&g| a.elements().iter().all(|&x| b.contains(amb.conj(g, x))))
    }

    /// One representative per conjugacy class of `p`-subgroups of `self`,
    /// ordered by order. Each representative is the lexicographically
    /// smallest member of its class.
    pub fn p_subgroups(&self, p: u64) -> Vec<Subgroup> {
        let amb = &self.0.ambient;
        let mut levels = vec![vec![Subgroup::trivial(amb)]];
        loop {
            let mut next: BTreeSet<Vec<Elem>> = BTreeSet::new();
            for s in levels.last().unwrap() {
                let n = self.normalizer(s);
                for &x in n.elements() {
                    if s.contains(x) || !s.contains(amb.pow(x, p)) {
                        continue;
                    }
                    let mut gens = s.generators().to_vec();
                    gens.push(x);
                    let t = Subgroup::generate(amb, &gens);
                    next.insert(self.canonical_conjugate(&t));
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next.into_iter().map(|e| Subgroup::from_sorted(amb, e)).collect());
        }
        levels.into_iter().flatten().collect()
    }

    /// A Sylow `p`-subgroup (the canonical representative of largest order).
    pub fn sylow(&self, p: u64) -> Subgroup {
        self.p_subgroups(p).pop().expect("trivial subgroup is always present")
    }

    /// This subgroup as a standalone group (elements renumbered by position)
    /// together with the isomorphism from `self`.
    pub fn to_group(&self, name: &str) -> (Arc<FiniteGroup>, GroupHom) {
        let amb = &self.0.ambient;
        let n = self.order();
        let mut mul = Vec::with_capacity(n * n);
        for &a in self.elements() {
            for &b in self.elements() {
                mul.push(self.position(amb.mul(a, b)).expect("closed") as Elem);
            }
        }
        let g = FiniteGroup::from_trusted_table(name, n, mul);
        let target = Subgroup::full(&g);
        let hom = GroupHom::from_images_unchecked(self, &target, (0..n as Elem).collect());
        (g, hom)
    }

    /// The quotient `self / n` as a table group with cosets ordered by
    /// smallest element, and the natural projection.
    pub fn quotient(&self, n: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupHom)> {
        self.require_same_ambient(n, "quotient")?;
        if !n.is_subgroup_of(self) || !n.is_normal_in(self) {
            return Err(Error::NotNormal(format!("order {} subgroup in group of order {}", n.order(), self.order())));
        }
        let amb = &self.0.ambient;
        let cosets = self.left_cosets(n);
        let mut coset_of = HashMap::new();
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of.insert(x, i as Elem);
            }
        }
        let k = cosets.len();
        let mut mul = Vec::with_capacity(k * k);
        for a in &cosets {
            for b in &cosets {
                mul.push(coset_of[&amb.mul(a[0], b[0])]);
            }
        }
        let q = FiniteGroup::from_trusted_table(&format!("{}/N", amb.name()), k, mul);
        let images = self.elements().iter().map(|x| coset_of[x]).collect();
        let hom = GroupHom::from_images_unchecked(self, &Subgroup::full(&q), images);
        Ok((q, hom))
    }

    /// `self x other` inside the product of the ambient groups.
    pub fn product(&self, other: &Subgroup) -> Subgroup {
        let amb = FiniteGroup::product(&self.0.ambient, &other.0.ambient);
        self.product_in(other, &amb)
    }

    /// `self x other` inside an existing product group `amb` of the two ambients.
    pub fn product_in(&self, other: &Subgroup, amb: &Arc<FiniteGroup>) -> Subgroup {
        let mut elems = Vec::with_capacity(self.order() * other.order());
        for &a in self.elements() {
            for &b in other.elements() {
                elems.push(amb.pair(a, b));
            }
        }
        Self::from_sorted(amb, elems)
    }

    /// Labels of the generators, for reports.
    pub fn describe(&self) -> String {
        let labels: Vec<String> = self.generators().iter().map(|&g| self.0.ambient.label(g)).collect();
        format!("<{}> (order {})", labels.join(", "), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, group_from_cycle_strings, symmetric, Permutation};

    fn elem(g: &Arc<FiniteGroup>, s: &str) -> Elem {
        g.find_permutation(&s.parse::<Permutation>().unwrap()).unwrap()
    }

    #[test]
    fn s3_structure() {
        let g = symmetric(3);
        let full = Subgroup::full(&g);
        assert!(full.center().is_trivial());
        let a3 = Subgroup::generate(&g, &[elem(&g, "(1,2,3)")]);
        assert_eq!(a3.order(), 3);
        assert_eq!(full.normalizer(&a3).order(), 6);
        assert!(a3.is_normal_in(&full));
        let c2 = Subgroup::generate(&g, &[elem(&g, "(1,2)")]);
        assert!(!c2.is_normal_in(&full));
        assert_eq!(full.centralizer(&Subgroup::trivial(&g)).order(), 6);
        let mut sizes: Vec<usize> = full.conjugacy_classes().classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(full.double_cosets(&c2, &c2).len(), 2);
        assert_eq!(full.double_cosets(&full, &full), vec![g.identity()]);
    }

    #[test]
    fn quotients() {
        let g = symmetric(3);
        let full = Subgroup::full(&g);
        let a3 = Subgroup::generate(&g, &[elem(&g, "(1,2,3)")]);
        let (q, pi) = full.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(pi.kernel(), a3);
        let (q1, _) = full.quotient(&full).unwrap();
        assert_eq!(q1.order(), 1);
        let (qg, pi) = full.quotient(&Subgroup::trivial(&g)).unwrap();
        assert_eq!(qg.order(), 6);
        assert!(pi.is_isomorphism());
        let c2 = Subgroup::generate(&g, &[elem(&g, "(1,2)")]);
        assert!(matches!(full.quotient(&c2), Err(Error::NotNormal(_))));
    }

    #[test]
    fn p_subgroups_of_small_groups() {
        let s3 = Subgroup::full(&symmetric(3));
        assert_eq!(s3.p_subgroups(2).iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(s3.p_subgroups(3).iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 3]);
        let c1 = Subgroup::full(&cyclic(1));
        assert_eq!(c1.p_subgroups(5).len(), 1);
        let s4 = Subgroup::full(&symmetric(4));
        // 2-subgroups of S4 up to conjugacy: 1, two classes of C2, C4, two classes of V4, D8
        let orders: Vec<usize> = s4.p_subgroups(2).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 4, 4, 4, 8]);
        assert_eq!(s4.sylow(3).order(), 3);
    }

    #[test]
    fn p_subgroup_representatives_are_pairwise_non_conjugate() {
        let a4 = group_from_cycle_strings("A4", &["(1,2,3)", "(1,2)(3,4)"]).unwrap();
        let full = Subgroup::full(&a4);
        let reps = full.p_subgroups(2);
        for (i, a) in reps.iter().enumerate() {
            assert!(a.order().is_power_of_two());
            for b in &reps[i + 1..] {
                assert!(!full.are_conjugate(a, b));
            }
        }
        assert_eq!(reps.len(), 3);
    }

    #[test]
    fn from_elements_validates() {
        let g = symmetric(3);
        let t = elem(&g, "(1,2)");
        let c = elem(&g, "(1,2,3)");
        assert!(Subgroup::from_elements(&g, &[g.identity(), t]).is_ok());
        assert!(Subgroup::from_elements(&g, &[g.identity(), t, c]).is_err());
        assert!(Subgroup::from_elements(&g, &[t]).is_err());
    }

    #[test]
    fn subgroup_products_live_in_product_ambient() {
        let (s3, c2) = (symmetric(3), cyclic(2));
        let dp = direct_product(&s3, &c2);
        let a = Subgroup::full(&s3);
        let b = Subgroup::full(&c2);
        let ab = a.product(&b);
        assert_eq!(ab.order(), 12);
        assert!(ab.is_full());
        assert_eq!(ab.ambient().key(), dp.group.key());
    }

    #[test]
    fn classes_partition_and_divide() {
        for g in [symmetric(4), cyclic(6)] {
            let full = Subgroup::full(&g);
            let cc = full.conjugacy_classes();
            let total: usize = cc.classes.iter().map(Vec::len).sum();
            assert_eq!(total, g.order());
            for c in &cc.classes {
                assert_eq!(g.order() % c.len(), 0);
            }
        }
    }
}
