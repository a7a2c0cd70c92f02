//! Subgroups of direct products: projections and kernels, the star product,
//! pullbacks along the middle factor and twisted diagonals.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupHom, Subgroup};

/// A subgroup `X <= G x H` with its projections `p1, p2` and kernels
/// `k1 = {g | (g,1) in X}`, `k2 = {h | (1,h) in X}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSubgroup {
    sub: Subgroup,
    p1: Subgroup,
    p2: Subgroup,
    k1: Subgroup,
    k2: Subgroup,
}

impl ProductSubgroup {
    /// Wraps a subgroup of a product group.
    pub fn new(sub: Subgroup) -> Result<ProductSubgroup> {
        let amb = sub.ambient().clone();
        let (g, h) = match amb.factors() {
            Some((g, h)) => (g.clone(), h.clone()),
            None => return Err(Error::AmbientMismatch(format!("{} is not a direct product", amb.name()))),
        };
        let (eg, eh) = (g.identity(), h.identity());
        let mut p1 = Vec::new();
        let mut p2 = Vec::new();
        let mut k1 = Vec::new();
        let mut k2 = Vec::new();
        for &z in sub.elements() {
            let (a, b) = amb.split(z);
            p1.push(a);
            p2.push(b);
            if b == eh {
                k1.push(a);
            }
            if a == eg {
                k2.push(b);
            }
        }
        Ok(ProductSubgroup {
            p1: Subgroup::from_elements_unchecked(&g, p1),
            p2: Subgroup::from_elements_unchecked(&h, p2),
            k1: Subgroup::from_elements_unchecked(&g, k1),
            k2: Subgroup::from_elements_unchecked(&h, k2),
            sub,
        })
    }

    /// Validated construction from a list of pairs in `ambient = G x H`.
    pub fn from_pairs(ambient: &Arc<FiniteGroup>, pairs: &[(Elem, Elem)]) -> Result<ProductSubgroup> {
        let ids: Vec<Elem> = pairs.iter().map(|&(a, b)| ambient.pair(a, b)).collect();
        Self::new(Subgroup::from_elements(ambient, &ids)?)
    }

    /// The subgroup of `ambient = G x H` generated by the given pairs.
    pub fn generate(ambient: &Arc<FiniteGroup>, pairs: &[(Elem, Elem)]) -> ProductSubgroup {
        let ids: Vec<Elem> = pairs.iter().map(|&(a, b)| ambient.pair(a, b)).collect();
        Self::new(Subgroup::generate(ambient, &ids)).expect("ambient is a product")
    }

    /// `A x B` for subgroups `A <= G`, `B <= H`.
    pub fn product_of(a: &Subgroup, b: &Subgroup) -> ProductSubgroup {
        Self::new(a.product(b)).expect("ambient is a product")
    }

    pub fn full(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> ProductSubgroup {
        Self::product_of(&Subgroup::full(g), &Subgroup::full(h))
    }

    /// `Delta(P) = {(x, x) | x in P}` inside `G x G`.
    pub fn diagonal(p: &Subgroup) -> ProductSubgroup {
        Self::twisted_diagonal(p, &GroupHom::identity(p), p).expect("identity is an isomorphism")
    }

    /// `Delta(P, phi, Q) = {(phi(y), y) | y in Q}` for an isomorphism `phi: Q -> P`.
    pub fn twisted_diagonal(p: &Subgroup, phi: &GroupHom, q: &Subgroup) -> Result<ProductSubgroup> {
        if phi.source() != q || phi.target() != p {
            return Err(Error::Homomorphism("twisted diagonal: phi must map Q to P".into()));
        }
        phi.check()?;
        if !phi.is_isomorphism() {
            return Err(Error::Homomorphism("twisted diagonal: phi is not bijective".into()));
        }
        let amb = FiniteGroup::product(p.ambient(), q.ambient());
        let ids = q.elements().iter().map(|&y| amb.pair(phi.apply(y), y)).collect();
        Self::new(Subgroup::from_elements_unchecked(&amb, ids))
    }

    /// `Delta(P, pi, G) = {(pi(g), g)}` for a homomorphism `pi: G -> P`
    /// (not necessarily injective), used for inflation and deflation.
    pub fn graph_left(pi: &GroupHom) -> ProductSubgroup {
        let amb = FiniteGroup::product(pi.target().ambient(), pi.source().ambient());
        let ids = pi.source().elements().iter().map(|&g| amb.pair(pi.apply(g), g)).collect();
        Self::new(Subgroup::from_elements_unchecked(&amb, ids)).expect("ambient is a product")
    }

    /// `{(g, pi(g))}` inside `G x P`.
    pub fn graph_right(pi: &GroupHom) -> ProductSubgroup {
        let amb = FiniteGroup::product(pi.source().ambient(), pi.target().ambient());
        let ids = pi.source().elements().iter().map(|&g| amb.pair(g, pi.apply(g))).collect();
        Self::new(Subgroup::from_elements_unchecked(&amb, ids)).expect("ambient is a product")
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<FiniteGroup> {
        self.sub.ambient()
    }

    pub fn left_group(&self) -> &Arc<FiniteGroup> {
        self.ambient().factors().unwrap().0
    }

    pub fn right_group(&self) -> &Arc<FiniteGroup> {
        self.ambient().factors().unwrap().1
    }

    pub fn order(&self) -> usize {
        self.sub.order()
    }

    pub fn p1(&self) -> &Subgroup {
        &self.p1
    }

    pub fn p2(&self) -> &Subgroup {
        &self.p2
    }

    pub fn k1(&self) -> &Subgroup {
        &self.k1
    }

    pub fn k2(&self) -> &Subgroup {
        &self.k2
    }

    pub fn contains_pair(&self, g: Elem, h: Elem) -> bool {
        self.sub.contains(self.ambient().pair(g, h))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        let amb = self.ambient();
        self.sub.elements().iter().map(move |&z| amb.split(z))
    }

    pub fn is_twisted_diagonal(&self) -> bool {
        self.k1.is_trivial() && self.k2.is_trivial()
    }

    /// For a twisted diagonal `Delta(P, phi, Q)`, the isomorphism `phi: Q -> P`.
    pub fn twisting_hom(&self) -> Result<GroupHom> {
        if !self.is_twisted_diagonal() {
            return Err(Error::Homomorphism("not a twisted diagonal".into()));
        }
        let images = self
            .p2
            .elements()
            .iter()
            .map(|&y| {
                self.pairs()
                    .find(|&(_, b)| b == y)
                    .map(|(a, _)| a)
                    .expect("every element of p2 has a partner")
            })
            .collect();
        GroupHom::from_images(&self.p2, &self.p1, images)
    }

    /// `(g,h) X (g,h)^-1`.
    pub fn conjugate_by(&self, g: Elem, h: Elem) -> ProductSubgroup {
        let amb = self.ambient();
        Self::new(self.sub.conjugate(amb.pair(g, h))).expect("ambient is a product")
    }

    /// `{(h, g) | (g, h) in X}` inside `H x G`.
    pub fn opposite(&self) -> ProductSubgroup {
        let amb = FiniteGroup::product(self.right_group(), self.left_group());
        let ids = self.pairs().map(|(a, b)| amb.pair(b, a)).collect();
        Self::new(Subgroup::from_elements_unchecked(&amb, ids)).expect("ambient is a product")
    }

    fn require_composable(&self, y: &ProductSubgroup) -> Result<()> {
        if self.right_group().same_as(y.left_group()) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(format!(
                "middle groups differ: {} vs {}",
                self.right_group().name(),
                y.left_group().name()
            )))
        }
    }
}

/// `k(X, Y) = k2(X) ∩ k1(Y)`.
pub fn middle_kernel(x: &ProductSubgroup, y: &ProductSubgroup) -> Result<Subgroup> {
    x.require_composable(y)?;
    Ok(x.k2().intersect(y.k1()))
}

/// `X * Y = {(g, k) | exists h: (g, h) in X, (h, k) in Y}`.
pub fn star(x: &ProductSubgroup, y: &ProductSubgroup) -> Result<ProductSubgroup> {
    x.require_composable(y)?;
    let amb = FiniteGroup::product(x.left_group(), y.right_group());
    let mut by_middle: HashMap<Elem, Vec<Elem>> = HashMap::new();
    for (h, k) in y.pairs() {
        by_middle.entry(h).or_default().push(k);
    }
    let mut ids = Vec::new();
    for (g, h) in x.pairs() {
        if let Some(ks) = by_middle.get(&h) {
            ids.extend(ks.iter().map(|&k| amb.pair(g, k)));
        }
    }
    ProductSubgroup::new(Subgroup::from_elements_unchecked(&amb, ids))
}

/// The pullback `X x_H Y` of `X -> H <- Y` with the map `nu` onto `X * Y`.
#[derive(Clone, Debug)]
pub struct PullbackData {
    pub pullback: ProductSubgroup,
    pub nu: GroupHom,
    pub kernel: Subgroup,
    pub star: ProductSubgroup,
}

pub fn pullback(x: &ProductSubgroup, y: &ProductSubgroup) -> Result<PullbackData> {
    let st = star(x, y)?;
    let amb = FiniteGroup::product(x.ambient(), y.ambient());
    let mut by_middle: HashMap<Elem, Vec<(Elem, Elem)>> = HashMap::new();
    for (z, (h, k)) in y.subgroup().elements().iter().zip(y.pairs()) {
        by_middle.entry(h).or_default().push((*z, k));
    }
    let mut ids = Vec::new();
    for (zx, (_, h)) in x.subgroup().elements().iter().zip(x.pairs()) {
        if let Some(list) = by_middle.get(&h) {
            ids.extend(list.iter().map(|&(zy, _)| amb.pair(*zx, zy)));
        }
    }
    let pb = Subgroup::from_elements_unchecked(&amb, ids);
    let st_amb = st.ambient().clone();
    let images = pb
        .elements()
        .iter()
        .map(|&z| {
            let (zx, zy) = amb.split(z);
            let (g, _) = x.ambient().split(zx);
            let (_, k) = y.ambient().split(zy);
            st_amb.pair(g, k)
        })
        .collect();
    let nu = GroupHom::from_images_unchecked(&pb, st.subgroup(), images);
    let kernel = nu.kernel();
    Ok(PullbackData { pullback: ProductSubgroup::new(pb)?, nu, kernel, star: st })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric, Permutation};

    fn perm(g: &Arc<FiniteGroup>, s: &str) -> Elem {
        g.find_permutation(&s.parse::<Permutation>().unwrap()).unwrap()
    }

    #[test]
    fn diagonal_and_full() {
        let g = symmetric(3);
        let d = ProductSubgroup::diagonal(&Subgroup::full(&g));
        assert_eq!(d.p1().order(), 6);
        assert!(d.k1().is_trivial() && d.k2().is_trivial());
        let f = ProductSubgroup::full(&g, &cyclic(2));
        assert_eq!(f.k1().order(), 6);
        assert_eq!(f.k2().order(), 2);
    }

    #[test]
    fn generated_diagonal_c2_in_s3_squared() {
        let g = symmetric(3);
        let amb = FiniteGroup::product(&g, &g);
        let t = perm(&g, "(1,2)");
        let x = ProductSubgroup::generate(&amb, &[(t, t)]);
        assert_eq!(x.p1().order(), 2);
        assert_eq!(x.p2().order(), 2);
        assert!(x.is_twisted_diagonal());
        let xx = star(&x, &x).unwrap();
        assert_eq!(xx, x);
    }

    #[test]
    fn star_of_full_products() {
        let (g, h, k) = (symmetric(3), cyclic(2), cyclic(3));
        let x = ProductSubgroup::full(&g, &h);
        let y = ProductSubgroup::full(&h, &k);
        assert_eq!(star(&x, &y).unwrap(), ProductSubgroup::full(&g, &k));
        let pb = pullback(&x, &y).unwrap();
        assert_eq!(pb.kernel.order(), 2);
        assert_eq!(pb.pullback.order(), 18 * 2);
        assert!(star(&y, &x).is_err());
    }

    #[test]
    fn pullback_of_diagonals() {
        let g = Subgroup::full(&symmetric(3));
        let d = ProductSubgroup::diagonal(&g);
        let pb = pullback(&d, &d).unwrap();
        assert!(pb.kernel.is_trivial());
        assert_eq!(pb.pullback.order(), 6);
        assert_eq!(pb.nu.image(), *pb.star.subgroup());
    }

    #[test]
    fn inversion_twisted_diagonal() {
        let c3 = cyclic(3);
        let s = Subgroup::full(&c3);
        let inv = GroupHom::from_generator_images(&s, &s, &[(1, c3.inv(1))]).unwrap();
        let d = ProductSubgroup::twisted_diagonal(&s, &inv, &s).unwrap();
        for (a, b) in d.pairs() {
            assert_eq!(a, c3.inv(b));
        }
        assert_eq!(d.twisting_hom().unwrap().images(), inv.images());
        let triv = Subgroup::trivial(&c3);
        let t = ProductSubgroup::twisted_diagonal(&triv, &GroupHom::identity(&triv), &triv).unwrap();
        assert_eq!(t.order(), 1);
    }
}
