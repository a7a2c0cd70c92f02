//! Bisets as one-sided actions of direct products, tensor products (direct
//! orbit enumeration and the Mackey-type formula), elementary bisets,
//! extended tensor products and the `DefRes` biset.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupHom, Subgroup};
use crate::gset::{check_points, iso_check, GAction, Point, TransitiveDecomposition, UnionFind, DEFAULT_MAX_POINTS};
use crate::subdirect::{middle_kernel, pullback, star, ProductSubgroup};

/// Largest acting group for which a coset biset is built explicitly.
pub const MAX_ACTING_ORDER: usize = 8_000_000;

/// A `(G, H)`-biset, stored as a left `G x H`-set with `(g, h) x = g x h^-1`.
#[derive(Clone, Debug)]
pub struct BisetView {
    action: GAction,
    left: Subgroup,
    right: Subgroup,
}

impl BisetView {
    /// Declares sides on an action of `left x right`.
    pub fn from_gaction(action: GAction, left: &Subgroup, right: &Subgroup) -> Result<BisetView> {
        if *action.group() != left.product(right) {
            return Err(Error::Biset("acting group is not the product of the declared sides".into()));
        }
        Ok(BisetView { action, left: left.clone(), right: right.clone() })
    }

    /// The transitive biset `(L x R) / X`.
    pub fn coset(left: &Subgroup, right: &Subgroup, x: &ProductSubgroup) -> Result<BisetView> {
        let lr = left.product(right);
        check_points("acting group of coset biset", lr.order(), MAX_ACTING_ORDER)?;
        if !x.subgroup().is_subgroup_of(&lr) {
            return Err(Error::Biset("stabilizer is not a subgroup of the product of the sides".into()));
        }
        let action = GAction::coset_action(&lr, x.subgroup())?;
        Ok(BisetView { action, left: left.clone(), right: right.clone() })
    }

    /// `(G x H) / X` for `X <= G x H`.
    pub fn from_product_subgroup(x: &ProductSubgroup) -> Result<BisetView> {
        Self::coset(&Subgroup::full(x.left_group()), &Subgroup::full(x.right_group()), x)
    }

    pub fn size(&self) -> usize {
        self.action.size()
    }

    pub fn left(&self) -> &Subgroup {
        &self.left
    }

    pub fn right(&self) -> &Subgroup {
        &self.right
    }

    pub fn as_gaction(&self) -> &GAction {
        &self.action
    }

    fn amb(&self) -> &Arc<FiniteGroup> {
        self.action.group().ambient()
    }

    #[inline]
    pub fn left_act(&self, g: Elem, x: Point) -> Point {
        let amb = self.amb();
        self.action.act(amb.pair(g, self.right.identity()), x)
    }

    /// `x . h`.
    #[inline]
    pub fn right_act(&self, x: Point, h: Elem) -> Point {
        let amb = self.amb();
        let hi = self.right.ambient().inv(h);
        self.action.act(amb.pair(self.left.identity(), hi), x)
    }

    pub fn disjoint_union(&self, other: &BisetView) -> Result<BisetView> {
        let action = self.action.disjoint_union(&other.action)?;
        Ok(BisetView { action, left: self.left.clone(), right: self.right.clone() })
    }

    /// For `U` a `(G, H)`-biset and `V` a `(K, L)`-biset, the
    /// `(G x K, H x L)`-biset `U x V`.
    pub fn product(&self, other: &BisetView) -> BisetView {
        let left = self.left.product(&other.left);
        let right = self.right.product(&other.right);
        let group = left.product(&right);
        let amb = group.ambient().clone();
        let (lamb, ramb) = (left.ambient().clone(), right.ambient().clone());
        let (a, b) = (self.clone(), other.clone());
        let m = other.size() as Point;
        let action = GAction::from_fn(&group, self.size() * other.size(), move |z, x| {
            let (gk, hl) = amb.split(z);
            let (g, k) = lamb.split(gk);
            let (h, l) = ramb.split(hl);
            let u = a.action.act(a.amb().pair(g, h), x / m);
            let v = b.action.act(b.amb().pair(k, l), x % m);
            u * m + v
        });
        BisetView { action, left, right }
    }

    /// Caches the action table.
    pub fn materialize(&self) -> BisetView {
        BisetView { action: self.action.materialize(), left: self.left.clone(), right: self.right.clone() }
    }

    pub fn decompose(&self) -> TransitiveDecomposition {
        self.action.decompose()
    }

    pub fn is_isomorphic(&self, other: &BisetView) -> Result<bool> {
        iso_check(&self.action, &other.action)
    }
}

/// Builds the action of `left x right` on orbit classes from tables of the
/// two commuting one-sided actions.
fn biset_from_tables(left: &Subgroup, right: &Subgroup, n: usize, ltab: Vec<Point>, rtab: Vec<Point>) -> BisetView {
    let group = left.product(right);
    let amb = group.ambient().clone();
    let (l, r) = (left.clone(), right.clone());
    let action = GAction::from_fn(&group, n, move |z, x| {
        let (g, k) = amb.split(z);
        let y = rtab[r.position(k).expect("right element") * n + x as usize];
        ltab[l.position(g).expect("left element") * n + y as usize]
    });
    BisetView { action, left: left.clone(), right: right.clone() }
}

/// `U (x)_H V`: the `H`-orbits of `U x V` under `h(u, v) = (u h^-1, h v)`,
/// labelled in order of their smallest member.
pub fn tensor_direct(u: &BisetView, v: &BisetView) -> Result<BisetView> {
    tensor_direct_capped(u, v, DEFAULT_MAX_POINTS)
}

pub fn tensor_direct_capped(u: &BisetView, v: &BisetView, cap: usize) -> Result<BisetView> {
    if u.right != v.left {
        return Err(Error::AmbientMismatch("tensor product: middle groups differ".into()));
    }
    let (nu, nv) = (u.size(), v.size());
    check_points("tensor product", nu * nv, cap)?;
    let nv32 = nv as Point;
    let mut uf = UnionFind::new(nu * nv);
    let mid_amb = u.right.ambient();
    for &h in u.right.generators() {
        let hi = mid_amb.inv(h);
        for a in 0..nu as Point {
            let ua = u.right_act(a, hi);
            for b in 0..nv32 {
                uf.union(a * nv32 + b, ua * nv32 + v.left_act(h, b));
            }
        }
    }
    let (label, m) = uf.labels();
    let mut reps = vec![Point::MAX; m];
    for (x, &l) in label.iter().enumerate() {
        if reps[l as usize] == Point::MAX {
            reps[l as usize] = x as Point;
        }
    }
    let mut ltab = Vec::with_capacity(u.left.order() * m);
    for &g in u.left.elements() {
        for &r in &reps {
            ltab.push(label[(u.left_act(g, r / nv32) * nv32 + r % nv32) as usize]);
        }
    }
    let k_amb = v.right.ambient();
    let mut rtab = Vec::with_capacity(v.right.order() * m);
    for &k in v.right.elements() {
        let ki = k_amb.inv(k);
        for &r in &reps {
            rtab.push(label[(r / nv32 * nv32 + v.right_act(r % nv32, ki)) as usize]);
        }
    }
    Ok(biset_from_tables(&u.left, &v.right, m, ltab, rtab))
}

/// `B (x)_R W` for a `(L, R)`-biset `B` and a left `R`-set `W`.
pub fn tensor_biset_set(b: &BisetView, w: &GAction, cap: usize) -> Result<GAction> {
    if b.right != *w.group() {
        return Err(Error::AmbientMismatch("biset and set disagree on the middle group".into()));
    }
    let (nb, nw) = (b.size(), w.size());
    check_points("biset applied to set", nb * nw, cap)?;
    let nw32 = nw as Point;
    let mut uf = UnionFind::new(nb * nw);
    let mid_amb = b.right.ambient();
    for &r in b.right.generators() {
        let ri = mid_amb.inv(r);
        for a in 0..nb as Point {
            let ba = b.right_act(a, ri);
            for x in 0..nw32 {
                uf.union(a * nw32 + x, ba * nw32 + w.act(r, x));
            }
        }
    }
    let (label, m) = uf.labels();
    let mut reps = vec![Point::MAX; m];
    for (x, &l) in label.iter().enumerate() {
        if reps[l as usize] == Point::MAX {
            reps[l as usize] = x as Point;
        }
    }
    let mut tab = Vec::with_capacity(b.left.order() * m);
    for &g in b.left.elements() {
        for &r in &reps {
            tab.push(label[(b.left_act(g, r / nw32) * nw32 + r % nw32) as usize]);
        }
    }
    Ok(GAction::from_flat(&b.left, m, tab))
}

/// `Res^G_H = (H x G) / Delta(H)`, an `(H, G)`-biset.
pub fn restriction(g: &Subgroup, h: &Subgroup) -> Result<BisetView> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Biset("restriction: H is not a subgroup of G".into()));
    }
    BisetView::coset(h, g, &ProductSubgroup::diagonal(h))
}

/// `Ind_H^G = (G x H) / Delta(H)`, a `(G, H)`-biset.
pub fn induction(g: &Subgroup, h: &Subgroup) -> Result<BisetView> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Biset("induction: H is not a subgroup of G".into()));
    }
    BisetView::coset(g, h, &ProductSubgroup::diagonal(h))
}

/// `Inf_{G/N}^G = (G x G/N) / Delta(G, pi)`, with the projection `pi`.
pub fn inflation(g: &Subgroup, n: &Subgroup) -> Result<(BisetView, GroupHom)> {
    let (_, pi) = g.quotient(n)?;
    let b = BisetView::coset(g, pi.target(), &ProductSubgroup::graph_right(&pi))?;
    Ok((b, pi))
}

/// `Def^G_{G/N} = (G/N x G) / Delta(pi, G)`, with the projection `pi`.
pub fn deflation(g: &Subgroup, n: &Subgroup) -> Result<(BisetView, GroupHom)> {
    let (_, pi) = g.quotient(n)?;
    let b = BisetView::coset(pi.target(), g, &ProductSubgroup::graph_left(&pi))?;
    Ok((b, pi))
}

/// `Iso_alpha = (G' x G) / Delta(alpha, G)` for an isomorphism `alpha: G -> G'`.
pub fn iso_biset(alpha: &GroupHom) -> Result<BisetView> {
    if !alpha.is_isomorphism() {
        return Err(Error::Biset("Iso requires an isomorphism".into()));
    }
    BisetView::coset(alpha.target(), alpha.source(), &ProductSubgroup::graph_left(alpha))
}

/// `Con_c = Iso` of conjugation `H -> cHc^-1`.
pub fn conjugation(h: &Subgroup, c: Elem) -> Result<BisetView> {
    iso_biset(&conjugation_hom(h, c))
}

pub(crate) fn conjugation_hom(h: &Subgroup, c: Elem) -> GroupHom {
    let amb = h.ambient();
    let target = h.conjugate(c);
    let images = h.elements().iter().map(|&x| amb.conj(c, x)).collect();
    GroupHom::from_images(h, &target, images).expect("conjugation is a homomorphism")
}

/// The identity `(G, G)`-biset `G = (G x G) / Delta(G)`.
pub fn identity_biset(g: &Subgroup) -> Result<BisetView> {
    BisetView::coset(g, g, &ProductSubgroup::diagonal(g))
}

/// Orbit decomposition of `(G x H)/X (x)_H (H x K)/Y` predicted by the
/// Mackey-type formula: one summand `X * ^(h,1)Y` per double coset
/// `p2(X) h p1(Y)` in `H`.
pub fn tensor_mackey(x: &ProductSubgroup, y: &ProductSubgroup) -> Result<TransitiveDecomposition> {
    let h_full = Subgroup::full(x.right_group());
    if !x.right_group().same_as(y.left_group()) {
        return Err(Error::AmbientMismatch("Mackey formula: middle groups differ".into()));
    }
    let gk = Subgroup::full(&FiniteGroup::product(x.left_group(), y.right_group()));
    let ek = y.right_group().identity();
    let mut stabs = Vec::new();
    for h in h_full.double_cosets(x.p2(), y.p1()) {
        let yh = y.conjugate_by(h, ek);
        stabs.push(star(x, &yh)?.subgroup().clone());
    }
    Ok(TransitiveDecomposition::from_stabilizers(&gk, stabs))
}

/// First two distinct middle elements `h` with `(g,h) in X`, `(h,k) in Y`,
/// keyed by the element `(g,k)` of `X * Y`.
fn middle_witnesses(x: &ProductSubgroup, y: &ProductSubgroup, st: &ProductSubgroup) -> HashMap<Elem, (Elem, Option<Elem>)> {
    let mut by_middle: HashMap<Elem, Vec<Elem>> = HashMap::new();
    for (h, k) in y.pairs() {
        by_middle.entry(h).or_default().push(k);
    }
    let amb = st.ambient();
    let mut out: HashMap<Elem, (Elem, Option<Elem>)> = HashMap::new();
    for (g, h) in x.pairs() {
        if let Some(ks) = by_middle.get(&h) {
            for &k in ks {
                let e = out.entry(amb.pair(g, k)).or_insert((h, None));
                if e.0 != h && e.1.is_none() {
                    e.1 = Some(h);
                }
            }
        }
    }
    out
}

/// The extended tensor product `U (x)_{X,Y} V`, an `X * Y`-set, where `U`
/// is an `X`-set and `V` a `Y`-set. Points are `k(X,Y)`-orbits of `U x V`
/// and `(g,k)(u (x) v) = (g,h)u (x) (h,k)v` for any middle `h`; the result
/// is recomputed with a second middle element where one exists.
pub fn extended_tensor(x: &ProductSubgroup, y: &ProductSubgroup, u: &GAction, v: &GAction) -> Result<GAction> {
    extended_tensor_capped(x, y, u, v, DEFAULT_MAX_POINTS)
}

pub fn extended_tensor_capped(
    x: &ProductSubgroup,
    y: &ProductSubgroup,
    u: &GAction,
    v: &GAction,
    cap: usize,
) -> Result<GAction> {
    if u.group() != x.subgroup() || v.group() != y.subgroup() {
        return Err(Error::Action("extended tensor: U must be an X-set and V a Y-set".into()));
    }
    let k = middle_kernel(x, y)?;
    let st = star(x, y)?;
    let (nu, nv) = (u.size(), v.size());
    check_points("extended tensor product", nu * nv, cap)?;
    let nv32 = nv as Point;
    let (xa, ya) = (x.ambient(), y.ambient());
    let (eg, ek) = (x.left_group().identity(), y.right_group().identity());
    let mut uf = UnionFind::new(nu * nv);
    for &l in k.generators() {
        let (xl, yl) = (xa.pair(eg, l), ya.pair(l, ek));
        for a in 0..nu as Point {
            let ua = u.act(xl, a);
            for b in 0..nv32 {
                uf.union(a * nv32 + b, ua * nv32 + v.act(yl, b));
            }
        }
    }
    let (label, m) = uf.labels();
    let mut reps = vec![Point::MAX; m];
    for (p, &l) in label.iter().enumerate() {
        if reps[l as usize] == Point::MAX {
            reps[l as usize] = p as Point;
        }
    }
    let witnesses = middle_witnesses(x, y, &st);
    let st_amb = st.ambient();
    let mut tab = Vec::with_capacity(st.order() * m);
    for &z in st.subgroup().elements() {
        let (g, kk) = st_amb.split(z);
        let (h1, h2) = *witnesses
            .get(&z)
            .ok_or_else(|| Error::Internal("element of X*Y without a middle witness".into()))?;
        let image = |h: Elem, r: Point| -> Point {
            let a = u.act(xa.pair(g, h), r / nv32);
            let b = v.act(ya.pair(h, kk), r % nv32);
            label[(a * nv32 + b) as usize]
        };
        for &r in &reps {
            let t = image(h1, r);
            if let Some(h2) = h2 {
                if image(h2, r) != t {
                    return Err(Error::Internal("extended tensor action depends on the middle element".into()));
                }
            }
            tab.push(t);
        }
    }
    Ok(GAction::from_flat(st.subgroup(), m, tab))
}

/// `DefRes^{X x Y}_{X*Y} = ((X*Y) x (X x Y)) / {(nu(z), z) | z in X x_H Y}`.
pub fn defres_biset(x: &ProductSubgroup, y: &ProductSubgroup) -> Result<BisetView> {
    let pb = pullback(x, y)?;
    let left = pb.star.subgroup().clone();
    let right = x.subgroup().product(y.subgroup());
    let amb = FiniteGroup::product(left.ambient(), right.ambient());
    let ids = pb.pullback.subgroup().elements().iter().map(|&z| amb.pair(pb.nu.apply(z), z)).collect();
    let stab = ProductSubgroup::new(Subgroup::from_elements_unchecked(&amb, ids))?;
    BisetView::coset(&left, &right, &stab)
}

/// `Iso_nubar (x) Def (x) Res`, the defining composite of [`defres_biset`],
/// assembled from elementary bisets.
pub fn defres_composite(x: &ProductSubgroup, y: &ProductSubgroup) -> Result<BisetView> {
    let pb = pullback(x, y)?;
    let p = pb.pullback.subgroup().clone();
    let xy = x.subgroup().product(y.subgroup());
    let res = restriction(&xy, &p)?;
    let (def, pi) = deflation(&p, &pb.kernel)?;
    let q = pi.target().clone();
    let mut nubar = vec![Elem::MAX; q.order()];
    for &z in p.elements() {
        let i = q.position(pi.apply(z)).unwrap();
        if nubar[i] == Elem::MAX {
            nubar[i] = pb.nu.apply(z);
        }
    }
    let nubar = GroupHom::from_images(&q, pb.star.subgroup(), nubar)?;
    let iso = iso_biset(&nubar)?;
    let step = tensor_direct(&iso, &def)?.materialize();
    tensor_direct(&step, &res)
}

/// Checks `U (x)_{X,Y} V  =~  DefRes^{X x Y}_{X*Y} (x)_{X x Y} (U x V)`.
pub fn check_prop_defres(x: &ProductSubgroup, y: &ProductSubgroup, u: &GAction, v: &GAction) -> Result<bool> {
    let lhs = extended_tensor(x, y, u, v)?;
    let rhs = tensor_biset_set(&defres_biset(x, y)?, &u.product(v), DEFAULT_MAX_POINTS)?;
    iso_check(&lhs, &rhs)
}

/// Checks, as `(X*Y, X' x Y')`-bisets,
/// `DefRes^{X x Y}_{X*Y} (x) Ind_{X' x Y'}^{X x Y}  =~
///  U_{(x,y)} Ind_{xX' * yY'}^{X*Y} (x) DefRes^{xX' x yY'}_{xX' * yY'} (x) Con_{(x,y)}`
/// over `(X x_H Y, X' x Y')`-double coset representatives `(x, y)` of `X x Y`.
pub fn check_defres_induction(
    x: &ProductSubgroup,
    xp: &ProductSubgroup,
    y: &ProductSubgroup,
    yp: &ProductSubgroup,
) -> Result<bool> {
    check_containment(x, xp, y, yp)?;
    let pb = pullback(x, y)?;
    let xy = x.subgroup().product(y.subgroup());
    let xpyp = xp.subgroup().product(yp.subgroup());
    let lhs = tensor_direct(&defres_biset(x, y)?, &induction(&xy, &xpyp)?)?;
    let amb = xy.ambient().clone();
    let mut rhs: Option<BisetView> = None;
    for z in xy.double_cosets(pb.pullback.subgroup(), &xpyp) {
        let (a, b) = amb.split(z);
        let xc = ProductSubgroup::new(xp.subgroup().conjugate(a))?;
        let yc = ProductSubgroup::new(yp.subgroup().conjugate(b))?;
        let st_c = star(&xc, &yc)?;
        let ind = induction(pb.star.subgroup(), st_c.subgroup())?;
        let dr = defres_biset(&xc, &yc)?;
        let con = conjugation(&xpyp, z)?;
        let term = tensor_direct(&tensor_direct(&ind, &dr)?.materialize(), &con)?;
        rhs = Some(match rhs {
            None => term,
            Some(acc) => acc.disjoint_union(&term)?,
        });
    }
    let rhs = rhs.ok_or_else(|| Error::Internal("no double cosets".into()))?;
    lhs.is_isomorphic(&rhs)
}

fn check_containment(x: &ProductSubgroup, xp: &ProductSubgroup, y: &ProductSubgroup, yp: &ProductSubgroup) -> Result<()> {
    if !xp.subgroup().is_subgroup_of(x.subgroup()) || !yp.subgroup().is_subgroup_of(y.subgroup()) {
        return Err(Error::NotASubgroup("X' <= X and Y' <= Y are required".into()));
    }
    Ok(())
}

/// Both sides of the induction formula for extended tensor products and
/// whether they are isomorphic `X*Y`-sets.
pub struct InductionFormula {
    pub lhs: GAction,
    pub rhs: GAction,
    pub witness: bool,
    pub num_double_cosets: usize,
}

/// `Ind_{X'}^X U (x)_{X,Y} Ind_{Y'}^Y V` versus the disjoint union over
/// `(X x_H Y, X' x Y')`-double coset representatives `(x, y)` of
/// `Ind_{xX' * yY'}^{X*Y} (xU (x) yV)`.
pub fn extended_induction_formula(
    x: &ProductSubgroup,
    xp: &ProductSubgroup,
    y: &ProductSubgroup,
    yp: &ProductSubgroup,
    u: &GAction,
    v: &GAction,
) -> Result<InductionFormula> {
    check_containment(x, xp, y, yp)?;
    let lhs = extended_tensor(x, y, &u.induce(x.subgroup())?.materialize(), &v.induce(y.subgroup())?.materialize())?;
    let pb = pullback(x, y)?;
    let xy = x.subgroup().product(y.subgroup());
    let xpyp = xp.subgroup().product(yp.subgroup());
    let amb = xy.ambient().clone();
    let reps = xy.double_cosets(pb.pullback.subgroup(), &xpyp);
    let mut rhs: Option<GAction> = None;
    for &z in &reps {
        let (a, b) = amb.split(z);
        let xc = ProductSubgroup::new(xp.subgroup().conjugate(a))?;
        let yc = ProductSubgroup::new(yp.subgroup().conjugate(b))?;
        let t = extended_tensor(&xc, &yc, &u.conjugate(a), &v.conjugate(b))?;
        let term = t.induce(pb.star.subgroup())?;
        rhs = Some(match rhs {
            None => term,
            Some(acc) => acc.disjoint_union(&term)?,
        });
    }
    let rhs = rhs.ok_or_else(|| Error::Internal("no double cosets".into()))?.materialize();
    let witness = iso_check(&lhs, &rhs)?;
    Ok(InductionFormula { lhs, rhs, witness, num_double_cosets: reps.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric, Permutation};

    fn s3_with_c2() -> (Arc<FiniteGroup>, Subgroup, Subgroup) {
        let g = symmetric(3);
        let t = g.find_permutation(&"(1,2)".parse::<Permutation>().unwrap()).unwrap();
        (g.clone(), Subgroup::full(&g), Subgroup::generate(&g, &[t]))
    }

    #[test]
    fn elementary_bisets() {
        let (_, s3, c2) = s3_with_c2();
        let ind = induction(&s3, &c2).unwrap();
        assert_eq!(ind.size(), 6);
        ind.as_gaction().check_laws().unwrap();
        let a3 = s3.sylow(3);
        let (inf, _) = inflation(&s3, &a3).unwrap();
        assert_eq!(inf.size(), 2);
        assert_eq!(inf.as_gaction().stabilizer(0).order(), 6);
        let res = restriction(&s3, &s3).unwrap();
        assert!(res.is_isomorphic(&identity_biset(&s3).unwrap()).unwrap());
    }

    #[test]
    fn unit_law() {
        let (_, s3, c2) = s3_with_c2();
        let ind = induction(&s3, &c2).unwrap();
        let left = tensor_direct(&identity_biset(&s3).unwrap(), &ind).unwrap();
        assert!(left.is_isomorphic(&ind).unwrap());
        let right = tensor_direct(&ind, &identity_biset(&c2).unwrap()).unwrap();
        assert!(right.is_isomorphic(&ind).unwrap());
    }

    #[test]
    fn restriction_after_induction_matches_mackey() {
        let (_, s3, c2) = s3_with_c2();
        let res = restriction(&s3, &c2).unwrap();
        let ind = induction(&s3, &c2).unwrap();
        let t = tensor_direct(&res, &ind).unwrap();
        // Res Ind on C2 <= S3: two double cosets C2 \ S3 / C2
        assert_eq!(t.size(), 6);
        assert_eq!(t.decompose().num_orbits(), 2);
    }

    #[test]
    fn mackey_formula_diagonals() {
        let (g, s3, c2) = s3_with_c2();
        let d = ProductSubgroup::diagonal(&s3);
        let m = tensor_mackey(&d, &d).unwrap();
        assert_eq!(m.num_orbits(), 1);
        let dc2 = ProductSubgroup::new(ProductSubgroup::diagonal(&c2).subgroup().clone()).unwrap();
        let m = tensor_mackey(&dc2, &dc2).unwrap();
        assert_eq!(m.num_orbits(), 2);
        let u = BisetView::from_product_subgroup(&dc2).unwrap();
        let direct = tensor_direct(&u, &u).unwrap().decompose();
        assert_eq!(direct, m);
        let full = ProductSubgroup::full(&g, &g);
        assert_eq!(tensor_mackey(&full, &full).unwrap().parts()[0].0.order(), 36);
    }

    #[test]
    fn extended_tensor_of_diagonal_c3() {
        let c3 = Subgroup::full(&cyclic(3));
        let d = ProductSubgroup::diagonal(&c3);
        let u = GAction::regular(d.subgroup());
        let t = extended_tensor(&d, &d, &u, &u).unwrap();
        assert_eq!(t.size(), 9);
        t.check_laws().unwrap();
        let one = GAction::trivial(d.subgroup(), 1);
        assert_eq!(extended_tensor(&d, &d, &one, &one).unwrap().size(), 1);
    }

    #[test]
    fn extended_tensor_of_full_products_is_ordinary_tensor() {
        let (g, h) = (symmetric(3), cyclic(2));
        let x = ProductSubgroup::full(&g, &h);
        let y = ProductSubgroup::full(&h, &g);
        let dx = Subgroup::generate(x.ambient(), &[x.ambient().pair(1, 1)]);
        let u = BisetView::coset(&Subgroup::full(&g), &Subgroup::full(&h), &ProductSubgroup::new(dx).unwrap()).unwrap();
        let v = BisetView::from_product_subgroup(&y).unwrap();
        let ext = extended_tensor(&x, &y, u.as_gaction(), v.as_gaction()).unwrap();
        let direct = tensor_direct(&u, &v).unwrap();
        assert!(iso_check(&ext, direct.as_gaction()).unwrap());
    }

    #[test]
    fn defres_matches_composite() {
        let (_, s3, c2) = s3_with_c2();
        let d = ProductSubgroup::diagonal(&s3);
        let dc2 = ProductSubgroup::diagonal(&c2);
        for (x, y) in [(&d, &d), (&dc2, &dc2)] {
            let a = defres_biset(x, y).unwrap();
            let b = defres_composite(x, y).unwrap();
            assert!(a.is_isomorphic(&b).unwrap());
        }
        let triv = ProductSubgroup::diagonal(&Subgroup::trivial(s3.ambient()));
        assert_eq!(defres_biset(&triv, &triv).unwrap().size(), 1);
    }

    #[test]
    fn prop_defres_on_diagonals() {
        let (_, _, c2) = s3_with_c2();
        let d = ProductSubgroup::diagonal(&c2);
        let u = GAction::regular(d.subgroup());
        assert!(check_prop_defres(&d, &d, &u, &u).unwrap());
        let one = GAction::trivial(d.subgroup(), 1);
        assert!(check_prop_defres(&d, &d, &one, &one).unwrap());
    }

    #[test]
    fn induction_formula_trivial_case() {
        let (_, s3, c2) = s3_with_c2();
        let d = ProductSubgroup::diagonal(&s3);
        let dc2 = ProductSubgroup::diagonal(&c2);
        let u = GAction::regular(dc2.subgroup());
        let f = extended_induction_formula(&d, &dc2, &d, &dc2, &u, &u).unwrap();
        assert!(f.witness);
        let same = extended_induction_formula(&d, &d, &d, &d, &GAction::regular(d.subgroup()), &GAction::regular(d.subgroup())).unwrap();
        assert_eq!(same.num_double_cosets, 1);
        assert!(same.witness);
        assert!(check_defres_induction(&d, &dc2, &d, &dc2).unwrap());
    }
}
