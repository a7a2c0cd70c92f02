//! Class functions with exact cyclotomic values: permutation characters,
//! induction and restriction, contraction over a middle group, the
//! character of extended tensor products, and validated character tables.

use std::collections::HashMap;

use crate::arith::lcm;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupHom, Subgroup};
use crate::gset::GAction;
use crate::subdirect::{middle_kernel, star, ProductSubgroup};

/// A function on a subgroup that is constant on its conjugacy classes,
/// stored as one value per class (class order of [`Subgroup::conjugacy_classes`]).
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    group: Subgroup,
    values: Vec<Cyclotomic>,
}

fn q(a: i128, b: i128) -> Rational {
    Rational::new(a, b)
}

impl ClassFunction {
    pub fn new(group: &Subgroup, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() != group.conjugacy_classes().len() {
            return Err(Error::CharacterTable(format!(
                "{} values for {} classes",
                values.len(),
                group.conjugacy_classes().len()
            )));
        }
        Ok(ClassFunction { group: group.clone(), values })
    }

    /// Evaluates `f` at the class representatives.
    pub fn from_fn(group: &Subgroup, f: impl Fn(Elem) -> Cyclotomic) -> ClassFunction {
        let cc = group.conjugacy_classes();
        let values = (0..cc.len()).map(|i| f(cc.rep(i))).collect();
        ClassFunction { group: group.clone(), values }
    }

    pub fn constant(group: &Subgroup, c: Cyclotomic) -> ClassFunction {
        Self::from_fn(group, |_| c.clone())
    }

    pub fn trivial(group: &Subgroup) -> ClassFunction {
        Self::constant(group, Cyclotomic::one())
    }

    pub fn zero(group: &Subgroup) -> ClassFunction {
        Self::constant(group, Cyclotomic::zero())
    }

    pub fn regular(group: &Subgroup) -> ClassFunction {
        let id = group.identity();
        let n = group.order() as i64;
        Self::from_fn(group, |g| Cyclotomic::int(if g == id { n } else { 0 }))
    }

    /// The linear character of a cyclic group `<gen>` sending `gen` to `zeta_m^j`.
    pub fn cyclic_linear(group: &Subgroup, gen: Elem, j: i64) -> Result<ClassFunction> {
        let amb = group.ambient();
        let m = amb.element_order(gen);
        if m as usize != group.order() || !group.contains(gen) {
            return Err(Error::CharacterTable("cyclic_linear: group is not generated by gen".into()));
        }
        let mut exp = HashMap::new();
        let mut x = amb.identity();
        for k in 0..m {
            exp.insert(x, k as i64);
            x = amb.mul(x, gen);
        }
        Ok(Self::from_fn(group, |g| Cyclotomic::root_of_unity(m, j * exp[&g])))
    }

    /// Number of fixed points of each element.
    pub fn perm_character(a: &GAction) -> ClassFunction {
        Self::from_fn(a.group(), |g| Cyclotomic::int(a.fixed_points(g) as i64))
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, g: Elem) -> &Cyclotomic {
        &self.values[self.group.class_index(g)]
    }

    pub fn degree(&self) -> &Cyclotomic {
        self.value(self.group.identity())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    fn require_same_group(&self, other: &ClassFunction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::AmbientMismatch("class functions on different groups".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.require_same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { group: self.group.clone(), values })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.add(&other.scale_int(-1))
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.require_same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { group: self.group.clone(), values })
    }

    pub fn scale(&self, c: &Cyclotomic) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn scale_int(&self, k: i64) -> ClassFunction {
        self.scale(&Cyclotomic::int(k))
    }

    /// Complex conjugate, the character of the dual module.
    pub fn dual(&self) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    /// The same values written over conductor `m` (a multiple of every value's conductor).
    pub fn lift(&self, m: u64) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v.lift(m)).collect() }
    }

    pub fn conductor(&self) -> u64 {
        self.values.iter().fold(1, |acc, v| lcm(acc, v.conductor()))
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<ClassFunction> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::NotASubgroup("restriction to a non-subgroup".into()));
        }
        Ok(Self::from_fn(h, |x| self.value(x).clone()))
    }

    /// Frobenius induction to a supergroup `g`.
    pub fn induce(&self, g: &Subgroup) -> Result<ClassFunction> {
        let h = &self.group;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotASubgroup("induction from a non-subgroup".into()));
        }
        let gcc = g.conjugacy_classes();
        let hcc = h.conjugacy_classes();
        let mut acc = vec![Cyclotomic::zero(); gcc.len()];
        for i in 0..hcc.len() {
            let j = g.class_index(hcc.rep(i));
            acc[j] += &self.values[i].scale(Rational::from_integer(hcc.size(i) as i128));
        }
        let values = acc
            .into_iter()
            .enumerate()
            .map(|(j, v)| {
                // |C_G(x)| / |H| = |G| / (|x^G| |H|)
                v.scale(q(g.order() as i128, (gcc.size(j) * h.order()) as i128))
            })
            .collect();
        Ok(ClassFunction { group: g.clone(), values })
    }

    /// `self o hom` for a class function on (a subgroup containing) the image.
    pub fn pull_back(&self, hom: &GroupHom) -> Result<ClassFunction> {
        if !hom.image().is_subgroup_of(&self.group) {
            return Err(Error::Homomorphism("image of the map leaves the domain of the class function".into()));
        }
        Ok(Self::from_fn(hom.source(), |x| self.value(hom.apply(x)).clone()))
    }

    /// Inflation along the projection `pi: G -> G/N`.
    pub fn inflate(&self, pi: &GroupHom) -> Result<ClassFunction> {
        if *pi.target() != self.group {
            return Err(Error::Homomorphism("inflation: class function is not on the quotient".into()));
        }
        self.pull_back(pi)
    }

    /// The conjugate class function on `c S c^-1`: `y -> f(c^-1 y c)`.
    pub fn conjugate(&self, c: Elem) -> ClassFunction {
        let amb = self.group.ambient();
        let ci = amb.inv(c);
        Self::from_fn(&self.group.conjugate(c), |y| self.value(amb.conj(ci, y)).clone())
    }

    /// External product `(g, h) -> f(g) f'(h)` on the product of the two groups.
    pub fn outer(&self, other: &ClassFunction) -> ClassFunction {
        let prod = self.group.product(&other.group);
        let amb = prod.ambient().clone();
        Self::from_fn(&prod, |z| {
            let (g, h) = amb.split(z);
            self.value(g) * other.value(h)
        })
    }

    /// `<f, f'> = |G|^-1 sum_g f(g) conj(f'(g))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclotomic> {
        self.require_same_group(other)?;
        let cc = self.group.conjugacy_classes();
        let mut acc = Cyclotomic::zero();
        for i in 0..cc.len() {
            let t = &self.values[i] * &other.values[i].conj();
            acc += &t.scale(Rational::from_integer(cc.size(i) as i128));
        }
        Ok(acc.scale(q(1, self.group.order() as i128)))
    }

    /// Integer multiplicities of the irreducible characters of `table`;
    /// fails unless `self` is an integer combination of them.
    pub fn decompose(&self, table: &CharacterTable) -> Result<Vec<i64>> {
        self.require_same_group(&table.irr[0])?;
        let mut mult = Vec::with_capacity(table.irr.len());
        for chi in &table.irr {
            let c = self.inner_product(chi)?;
            match c.to_integer() {
                Some(k) => mult.push(k as i64),
                None => {
                    return Err(Error::NotVirtualCharacter(format!(
                        "multiplicity {} of {} is not an integer",
                        c,
                        table.name_of(mult.len())
                    )))
                }
            }
        }
        let rebuilt = table.combination(&mult)?;
        if rebuilt != *self {
            return Err(Error::NotVirtualCharacter("not in the span of the irreducible characters".into()));
        }
        Ok(mult)
    }
}

/// `(I_mu psi)(g) = |H|^-1 sum_{h in H} mu(g, h) psi(h)` for `mu` on `G x H`
/// and `psi` on `H`: the character of `M (x)_{KH} N` when `mu` is the
/// character of the bimodule `M` with `(g, h) m = g m h^-1`.
pub fn contract_middle(mu: &ClassFunction, psi: &ClassFunction) -> Result<ClassFunction> {
    let amb = mu.group().ambient().clone();
    let (lg, rg) = amb
        .factors()
        .ok_or_else(|| Error::AmbientMismatch("contract_middle: mu must live on a product".into()))?;
    let xsub = ProductSubgroup::new(mu.group().clone())?;
    let (g, h) = (xsub.p1().clone(), xsub.p2().clone());
    if *mu.group() != g.product(&h) || h != *psi.group() || !rg.same_as(psi.group().ambient()) {
        return Err(Error::AmbientMismatch("contract_middle: mu must be a class function on G x H with psi on H".into()));
    }
    let _ = lg;
    let inv_h = q(1, h.order() as i128);
    Ok(ClassFunction::from_fn(&g, |x| {
        let mut acc = Cyclotomic::zero();
        for &y in h.elements() {
            acc += &(mu.value(amb.pair(x, y)) * psi.value(y));
        }
        acc.scale(inv_h)
    }))
}

/// Character of the extended tensor product of an `X`-module with
/// character `chi_m` and a `Y`-module with character `chi_n`:
/// `(g, k) -> |k(X,Y)|^-1 sum_h chi_m(g, h) chi_n(h, k)` over the middle
/// elements `h` with `(g, h) in X`, `(h, k) in Y`.
pub fn contract_extended(
    x: &ProductSubgroup,
    y: &ProductSubgroup,
    chi_m: &ClassFunction,
    chi_n: &ClassFunction,
) -> Result<ClassFunction> {
    if chi_m.group() != x.subgroup() || chi_n.group() != y.subgroup() {
        return Err(Error::AmbientMismatch("contract_extended: characters must live on X and Y".into()));
    }
    let k = middle_kernel(x, y)?;
    let st = star(x, y)?;
    let mut by_middle: HashMap<Elem, Vec<Elem>> = HashMap::new();
    for (h, kk) in y.pairs() {
        by_middle.entry(h).or_default().push(kk);
    }
    let st_amb = st.ambient().clone();
    let cc = st.subgroup().conjugacy_classes();
    let rep_index: HashMap<Elem, usize> = (0..cc.len()).map(|i| (cc.rep(i), i)).collect();
    let mut acc = vec![Cyclotomic::zero(); cc.len()];
    let (xa, ya) = (x.ambient(), y.ambient());
    for (g, h) in x.pairs() {
        if let Some(ks) = by_middle.get(&h) {
            for &kk in ks {
                if let Some(&i) = rep_index.get(&st_amb.pair(g, kk)) {
                    acc[i] += &(chi_m.value(xa.pair(g, h)) * chi_n.value(ya.pair(h, kk)));
                }
            }
        }
    }
    let inv_k = q(1, k.order() as i128);
    ClassFunction::new(st.subgroup(), acc.into_iter().map(|v| v.scale(inv_k)).collect())
}

/// Character-level check of the induction formula for tensor products:
/// `Ind_X^{GxH}(chi_m) (x)_H Ind_Y^{HxK}(chi_n)` equals
/// `sum_h Ind_{X * (h,1)Y}^{GxK}(chi_m (x)_{X, (h,1)Y} (h,1)chi_n)` over
/// `(p2(X), p1(Y))`-double coset representatives `h` of `H`.
pub fn verify_bouc_formula(x: &ProductSubgroup, y: &ProductSubgroup, chi_m: &ClassFunction, chi_n: &ClassFunction) -> Result<bool> {
    let (lhs, rhs) = bouc_formula_sides(x, y, chi_m, chi_n)?;
    Ok(lhs == rhs)
}

/// Both sides of [`verify_bouc_formula`].
pub fn bouc_formula_sides(
    x: &ProductSubgroup,
    y: &ProductSubgroup,
    chi_m: &ClassFunction,
    chi_n: &ClassFunction,
) -> Result<(ClassFunction, ClassFunction)> {
    let (g, h, k) = (x.left_group().clone(), x.right_group().clone(), y.right_group().clone());
    let gh = ProductSubgroup::full(&g, &h);
    let hk = ProductSubgroup::full(&h, &k);
    let ind_m = chi_m.induce(gh.subgroup())?;
    let ind_n = chi_n.induce(hk.subgroup())?;
    let lhs = contract_extended(&gh, &hk, &ind_m, &ind_n)?;
    let gk = Subgroup::full(&FiniteGroup::product(&g, &k));
    let mut rhs = ClassFunction::zero(&gk);
    let ek = k.identity();
    for hh in Subgroup::full(&h).double_cosets(x.p2(), y.p1()) {
        let c = y.ambient().pair(hh, ek);
        let yh = ProductSubgroup::new(y.subgroup().conjugate(c))?;
        let chi_nh = chi_n.conjugate(c);
        let term = contract_extended(x, &yh, chi_m, &chi_nh)?;
        rhs = rhs.add(&term.induce(&gk)?)?;
    }
    Ok((lhs, rhs))
}

/// Irreducible characters of a group, validated on construction.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    irr: Vec<ClassFunction>,
    names: Vec<String>,
}

impl CharacterTable {
    /// Checks that the first character is trivial, that the characters are
    /// orthonormal, that there are as many as classes, that the squared
    /// degrees sum to the group order, and that restrictions to cyclic
    /// subgroups have non-negative integer eigenvalue multiplicities.
    pub fn new(irr: Vec<ClassFunction>, names: Vec<String>) -> Result<CharacterTable> {
        let Some(first) = irr.first() else {
            return Err(Error::CharacterTable("no characters".into()));
        };
        let group = first.group().clone();
        if names.len() != irr.len() {
            return Err(Error::CharacterTable("one name per character required".into()));
        }
        if irr.iter().any(|c| *c.group() != group) {
            return Err(Error::CharacterTable("characters on different groups".into()));
        }
        let ncl = group.conjugacy_classes().len();
        if irr.len() != ncl {
            return Err(Error::CharacterTable(format!("{} characters for {} classes", irr.len(), ncl)));
        }
        if *first != ClassFunction::trivial(&group) {
            return Err(Error::CharacterTable("first character is not trivial".into()));
        }
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let expect = Cyclotomic::int((i == j) as i64);
                if ip != expect {
                    return Err(Error::CharacterTable(format!(
                        "<{}, {}> = {} (expected {})",
                        names[i], names[j], ip, expect
                    )));
                }
            }
        }
        let sq: i128 = irr
            .iter()
            .map(|c| c.degree().to_integer().map(|d| d * d).unwrap_or(i128::MIN / 4))
            .sum();
        if sq != group.order() as i128 {
            return Err(Error::CharacterTable(format!("squared degrees sum to {sq}, group order {}", group.order())));
        }
        let table = CharacterTable { irr, names };
        table.check_cyclic_restrictions()?;
        Ok(table)
    }

    fn check_cyclic_restrictions(&self) -> Result<()> {
        let group = self.group().clone();
        let amb = group.ambient();
        let cc = group.conjugacy_classes();
        for i in 0..cc.len() {
            let g = cc.rep(i);
            let m = amb.element_order(g);
            let powers: Vec<Elem> = (0..m).map(|k| amb.pow(g, k)).collect();
            for (ci, chi) in self.irr.iter().enumerate() {
                for j in 0..m as i64 {
                    let mut acc = Cyclotomic::zero();
                    for (k, &x) in powers.iter().enumerate() {
                        acc += &(chi.value(x) * &Cyclotomic::root_of_unity(m, -j * k as i64));
                    }
                    let mult = acc.scale(q(1, m as i128));
                    if mult.to_integer().map_or(true, |v| v < 0) {
                        return Err(Error::CharacterTable(format!(
                            "{} restricted to <{}> has eigenvalue multiplicity {}",
                            self.names[ci],
                            amb.label(g),
                            mult
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Subgroup {
        self.irr[0].group()
    }

    pub fn irr(&self) -> &[ClassFunction] {
        &self.irr
    }

    pub fn len(&self) -> usize {
        self.irr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irr.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, i: usize) -> &str {
        self.names.get(i).map(String::as_str).unwrap_or("?")
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irr.iter().map(|c| c.degree().to_integer().unwrap() as i64).collect()
    }

    pub fn combination(&self, mult: &[i64]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(self.group());
        for (chi, &m) in self.irr.iter().zip(mult) {
            if m != 0 {
                acc = acc.add(&chi.scale_int(m))?;
            }
        }
        Ok(acc)
    }

    /// The table transported along an isomorphism onto another group.
    pub fn transport(&self, iso: &GroupHom) -> Result<CharacterTable> {
        if iso.source() != self.group() || !iso.is_isomorphism() {
            return Err(Error::Homomorphism("transport needs an isomorphism from the table's group".into()));
        }
        let inv = iso.inverse()?;
        let irr = self.irr.iter().map(|c| c.pull_back(&inv)).collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable { irr, names: self.names.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biset::{extended_tensor, tensor_direct, BisetView};
    use crate::group::{cyclic, symmetric};

    fn s3_table() -> CharacterTable {
        let g = symmetric(3);
        let full = Subgroup::full(&g);
        let sign = ClassFunction::from_fn(&full, |x| {
            Cyclotomic::int(if g.element_order(x) == 2 { -1 } else { 1 })
        });
        let std = ClassFunction::from_fn(&full, |x| {
            Cyclotomic::int(match g.element_order(x) {
                1 => 2,
                2 => 0,
                _ => -1,
            })
        });
        CharacterTable::new(vec![ClassFunction::trivial(&full), sign, std], vec!["1".into(), "sgn".into(), "chi2".into()])
            .unwrap()
    }

    #[test]
    fn s3_table_validates() {
        let t = s3_table();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        let full = t.group().clone();
        let reg = ClassFunction::regular(&full);
        assert_eq!(reg.decompose(&t).unwrap(), vec![1, 1, 2]);
        let nat = ClassFunction::perm_character(&GAction::natural(&full).unwrap());
        assert_eq!(nat.decompose(&t).unwrap(), vec![1, 0, 1]);
        let half = t.irr()[2].scale(&Cyclotomic::rational(q(1, 2)));
        assert!(matches!(half.decompose(&t), Err(Error::NotVirtualCharacter(_))));
    }

    #[test]
    fn rejects_non_orthogonal_table() {
        let t = s3_table();
        let mut irr = t.irr().to_vec();
        irr[1] = irr[0].clone();
        let err = CharacterTable::new(irr, t.names().to_vec()).unwrap_err();
        assert!(matches!(err, Error::CharacterTable(_)));
    }

    #[test]
    fn frobenius_reciprocity_and_induction() {
        let t = s3_table();
        let full = t.group().clone();
        let c3 = full.sylow(3);
        let gen = c3.generators()[0];
        let lam = ClassFunction::cyclic_linear(&c3, gen, 1).unwrap();
        let ind = lam.induce(&full).unwrap();
        assert_eq!(ind, t.irr()[2]);
        for chi in t.irr() {
            assert_eq!(
                ind.inner_product(chi).unwrap(),
                lam.inner_product(&chi.restrict(&c3).unwrap()).unwrap()
            );
        }
        let triv = ClassFunction::trivial(&Subgroup::trivial(full.ambient()));
        assert_eq!(triv.induce(&full).unwrap(), ClassFunction::regular(&full));
    }

    #[test]
    fn contraction_with_identity_bimodule() {
        let t = s3_table();
        let full = t.group().clone();
        let id = BisetView::from_product_subgroup(&ProductSubgroup::diagonal(&full)).unwrap();
        let mu = ClassFunction::perm_character(id.as_gaction());
        for psi in t.irr() {
            assert_eq!(contract_middle(&mu, psi).unwrap(), *psi);
        }
        let rank_one = t.irr()[2].outer(&t.irr()[1].dual());
        assert_eq!(contract_middle(&rank_one, &t.irr()[1]).unwrap(), t.irr()[2]);
        assert!(contract_middle(&rank_one, &t.irr()[0]).unwrap().is_zero());
    }

    #[test]
    fn linearization_of_tensor_products() {
        let s3 = symmetric(3);
        let full = Subgroup::full(&s3);
        let c2 = full.p_subgroups(2).pop().unwrap();
        let u = crate::biset::induction(&full, &c2).unwrap();
        let v = crate::biset::restriction(&full, &c2).unwrap();
        let uv = tensor_direct(&u, &v).unwrap();
        let direct = ClassFunction::perm_character(uv.as_gaction());
        let gh = ProductSubgroup::new(u.as_gaction().group().clone()).unwrap();
        let hk = ProductSubgroup::new(v.as_gaction().group().clone()).unwrap();
        let via = contract_extended(
            &gh,
            &hk,
            &ClassFunction::perm_character(u.as_gaction()),
            &ClassFunction::perm_character(v.as_gaction()),
        )
        .unwrap();
        assert_eq!(direct, via);
    }

    #[test]
    fn extended_character_matches_fixed_points() {
        let c3 = Subgroup::full(&cyclic(3));
        let d = ProductSubgroup::diagonal(&c3);
        let u = GAction::regular(d.subgroup());
        let t = extended_tensor(&d, &d, &u, &u).unwrap();
        let chi = ClassFunction::perm_character(&u);
        assert_eq!(ClassFunction::perm_character(&t), contract_extended(&d, &d, &chi, &chi).unwrap());
        let one = ClassFunction::trivial(d.subgroup());
        assert_eq!(contract_extended(&d, &d, &one, &one).unwrap(), ClassFunction::trivial(d.subgroup()));
    }

    #[test]
    fn bouc_formula_on_diagonals() {
        let s3 = Subgroup::full(&symmetric(3));
        let c2 = s3.p_subgroups(2).pop().unwrap();
        let d = ProductSubgroup::diagonal(&c2);
        let chi = ClassFunction::cyclic_linear(d.subgroup(), d.subgroup().generators()[0], 1).unwrap();
        assert!(verify_bouc_formula(&d, &d, &chi, &chi).unwrap());
        let g = s3.ambient().clone();
        let full = ProductSubgroup::full(&g, &g);
        let one = ClassFunction::trivial(full.subgroup());
        assert!(verify_bouc_formula(&full, &full, &one, &one).unwrap());
    }

    #[test]
    fn conductor_independence() {
        let t = s3_table();
        let a = t.irr()[2].inner_product(&t.irr()[2]).unwrap();
        let b = t.irr()[2].lift(12).inner_product(&t.irr()[2].lift(12)).unwrap();
        assert_eq!(a, b);
    }
}
