//! Blocks of group algebras over a splitting field `F_q`: block
//! idempotents in the class-sum basis of the center, the Brauer
//! homomorphism, defect groups, maximal Brauer pairs, defect-zero simple
//! modules, block membership of ordinary characters, and the Brauer
//! construction of transitive permutation bimodules.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charmod::CharacterTable;
use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::field::{Field, FqElem};
use crate::group::{Elem, Subgroup};
use crate::gset::{GAction, Point};
use crate::linalg::{rank_fq, row_reduce_fq, solve_fq};
use crate::poly::{roots, FqPoly};
use crate::subdirect::ProductSubgroup;

/// An element of `Z(F_q S)` written in the class-sum basis of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    field: Arc<Field>,
    group: Subgroup,
    coeffs: Vec<FqElem>,
}

/// An element of `F_q S`, one coefficient per element of `S` (in sorted order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElem {
    field: Arc<Field>,
    group: Subgroup,
    coeffs: Vec<FqElem>,
}

fn same_algebra(a: (&Arc<Field>, &Subgroup), b: (&Arc<Field>, &Subgroup)) -> Result<()> {
    if a.0 != b.0 || a.1 != b.1 {
        return Err(Error::AmbientMismatch("elements of different group algebras".into()));
    }
    Ok(())
}

impl CentralElement {
    pub fn new(field: &Arc<Field>, group: &Subgroup, coeffs: Vec<FqElem>) -> Result<CentralElement> {
        if coeffs.len() != group.conjugacy_classes().len() || coeffs.iter().any(|&c| c as u64 >= field.size()) {
            return Err(Error::Blocks("central element: one field element per class required".into()));
        }
        Ok(CentralElement { field: field.clone(), group: group.clone(), coeffs })
    }

    pub fn zero(field: &Arc<Field>, group: &Subgroup) -> CentralElement {
        let n = group.conjugacy_classes().len();
        CentralElement { field: field.clone(), group: group.clone(), coeffs: vec![0; n] }
    }

    pub fn one(field: &Arc<Field>, group: &Subgroup) -> CentralElement {
        Self::class_sum(field, group, group.class_index(group.identity()))
    }

    pub fn class_sum(field: &Arc<Field>, group: &Subgroup, i: usize) -> CentralElement {
        let mut z = Self::zero(field, group);
        z.coeffs[i] = 1;
        z
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    /// Coefficient of the group element `g`.
    pub fn coeff(&self, g: Elem) -> FqElem {
        self.coeffs[self.group.class_index(g)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &CentralElement) -> Result<CentralElement> {
        same_algebra((&self.field, &self.group), (&o.field, &o.group))?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(CentralElement { coeffs, ..self.clone() })
    }

    pub fn sub(&self, o: &CentralElement) -> Result<CentralElement> {
        self.add(&o.scale(self.field.neg(1)))
    }

    pub fn scale(&self, s: FqElem) -> CentralElement {
        let f = &self.field;
        CentralElement { coeffs: self.coeffs.iter().map(|&a| f.mul(a, s)).collect(), ..self.clone() }
    }

    pub fn mul(&self, o: &CentralElement) -> Result<CentralElement> {
        same_algebra((&self.field, &self.group), (&o.field, &o.group))?;
        let f = &self.field;
        let g = &self.group;
        let amb = g.ambient();
        let cc = g.conjugacy_classes();
        let class_of: Vec<usize> = g.elements().iter().map(|&x| g.class_index(x)).collect();
        let coeffs = (0..cc.len())
            .map(|k| {
                let z = cc.rep(k);
                let mut acc = 0;
                for (i, &x) in g.elements().iter().enumerate() {
                    let a = self.coeffs[class_of[i]];
                    if a == 0 {
                        continue;
                    }
                    let b = o.coeffs[g.class_index(amb.mul(amb.inv(x), z))];
                    if b != 0 {
                        acc = f.add(acc, f.mul(a, b));
                    }
                }
                acc
            })
            .collect();
        Ok(CentralElement { coeffs, ..self.clone() })
    }

    pub fn pow(&self, mut k: u64) -> CentralElement {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field, &self.group);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            k >>= 1;
        }
        acc
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).map(|s| s == *self).unwrap_or(false)
    }

    /// Image under the augmentation map `g -> 1`.
    pub fn augmentation(&self) -> FqElem {
        let f = &self.field;
        let cc = self.group.conjugacy_classes();
        (0..cc.len()).fold(0, |acc, i| f.add(acc, f.mul(self.coeffs[i], f.from_int(cc.size(i) as i64))))
    }

    pub fn to_dense(&self) -> GroupAlgebraElem {
        GroupAlgebraElem::from_fn(&self.field, &self.group, |g| self.coeff(g))
    }

    /// Brauer homomorphism `br_D`: truncation to `C_S(D)`, an element of `Z(F_q C_S(D))`.
    pub fn brauer(&self, d: &Subgroup) -> Result<CentralElement> {
        if !d.is_subgroup_of(&self.group) {
            return Err(Error::NotASubgroup("brauer: D must lie in the group".into()));
        }
        let c = self.group.centralizer(d);
        let cc = c.conjugacy_classes();
        let coeffs = (0..cc.len()).map(|i| self.coeff(cc.rep(i))).collect();
        Ok(CentralElement { field: self.field.clone(), group: c, coeffs })
    }

    /// Transport to another subgroup with the same elements.
    fn on(&self, group: &Subgroup) -> CentralElement {
        CentralElement::new(
            &self.field,
            group,
            (0..group.conjugacy_classes().len()).map(|i| self.coeff(group.conjugacy_classes().rep(i))).collect(),
        )
        .expect("same class structure")
    }

    /// `g x g^-1` as an element of `Z(F_q (g S g^-1))`.
    pub fn conjugate(&self, g: Elem) -> CentralElement {
        let amb = self.group.ambient();
        let gi = amb.inv(g);
        let target = self.group.conjugate(g);
        let cc = target.conjugacy_classes();
        let coeffs = (0..cc.len()).map(|i| self.coeff(amb.conj(gi, cc.rep(i)))).collect();
        CentralElement { field: self.field.clone(), group: target, coeffs }
    }

    /// Nonzero coefficients as `(class representative label, value)` pairs.
    pub fn describe(&self) -> Vec<(String, String)> {
        let cc = self.group.conjugacy_classes();
        let amb = self.group.ambient();
        (0..cc.len())
            .filter(|&i| self.coeffs[i] != 0)
            .map(|i| (amb.label(cc.rep(i)), self.field.format(self.coeffs[i])))
            .collect()
    }
}

impl GroupAlgebraElem {
    pub fn from_fn(field: &Arc<Field>, group: &Subgroup, f: impl Fn(Elem) -> FqElem) -> GroupAlgebraElem {
        GroupAlgebraElem { field: field.clone(), group: group.clone(), coeffs: group.elements().iter().map(|&g| f(g)).collect() }
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn coeff(&self, g: Elem) -> FqElem {
        self.group.position(g).map_or(0, |i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        same_algebra((&self.field, &self.group), (&o.field, &o.group))?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(GroupAlgebraElem { coeffs, ..self.clone() })
    }

    pub fn mul(&self, o: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        same_algebra((&self.field, &self.group), (&o.field, &o.group))?;
        let f = &self.field;
        let g = &self.group;
        let amb = g.ambient();
        let el = g.elements();
        let mut coeffs = vec![0; el.len()];
        for (i, &x) in el.iter().enumerate() {
            if self.coeffs[i] == 0 {
                continue;
            }
            for (j, &y) in el.iter().enumerate() {
                if o.coeffs[j] == 0 {
                    continue;
                }
                let k = g.position(amb.mul(x, y)).unwrap();
                coeffs[k] = f.add(coeffs[k], f.mul(self.coeffs[i], o.coeffs[j]));
            }
        }
        Ok(GroupAlgebraElem { coeffs, ..self.clone() })
    }

    pub fn is_fixed_by(&self, d: &Subgroup) -> bool {
        let amb = self.group.ambient();
        d.generators().iter().all(|&x| self.group.elements().iter().all(|&g| self.coeff(amb.conj(x, g)) == self.coeff(g)))
    }

    /// Brauer homomorphism on `(F_q S)^D`.
    pub fn brauer(&self, d: &Subgroup) -> Result<GroupAlgebraElem> {
        if !d.is_subgroup_of(&self.group) {
            return Err(Error::NotASubgroup("brauer: D must lie in the group".into()));
        }
        if !self.is_fixed_by(d) {
            return Err(Error::Blocks("brauer: element is not fixed under conjugation by D".into()));
        }
        let c = self.group.centralizer(d);
        Ok(GroupAlgebraElem::from_fn(&self.field, &c, |g| self.coeff(g)))
    }
}

/// A random element of `(F_q S)^D`: constant on `D`-conjugation orbits.
pub fn random_fixed_element(field: &Arc<Field>, group: &Subgroup, d: &Subgroup, rng: &mut ChaCha8Rng) -> GroupAlgebraElem {
    let amb = group.ambient();
    let mut value: BTreeMap<Elem, FqElem> = BTreeMap::new();
    for &g in group.elements() {
        if value.contains_key(&g) {
            continue;
        }
        let v = rng.gen_range(0..field.size() as u32);
        for &x in d.elements() {
            value.insert(amb.conj(x, g), v);
        }
    }
    GroupAlgebraElem::from_fn(field, group, |g| value[&g])
}

fn vec_of(e: &CentralElement) -> Vec<FqElem> {
    e.coeffs.clone()
}

/// Primitive idempotents of `Z(F_q S)`, principal block first, the rest in
/// lexicographic order of their coefficient vectors. `order_seed` permutes
/// the basis used when searching for splitting elements; the result does
/// not depend on it.
pub fn block_idempotents(field: &Arc<Field>, group: &Subgroup, seed: u64) -> Result<Vec<CentralElement>> {
    block_idempotents_with(field, group, seed, None)
}

pub fn block_idempotents_with(
    field: &Arc<Field>,
    group: &Subgroup,
    seed: u64,
    order_seed: Option<u64>,
) -> Result<Vec<CentralElement>> {
    let f = field.as_ref();
    let r = group.conjugacy_classes().len();
    // Frobenius z -> z^q on the class-sum basis, as columns
    let images: Vec<Vec<FqElem>> =
        (0..r).map(|i| vec_of(&CentralElement::class_sum(field, group, i).pow(f.size()))).collect();
    let mut n_iter = 1;
    while (f.size() as u128).pow(n_iter) < r as u128 {
        n_iter += 1;
    }
    // stable image: apply the map n_iter times to every basis vector
    let apply = |v: &[FqElem]| -> Vec<FqElem> {
        let mut out = vec![0; r];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for k in 0..r {
                out[k] = f.add(out[k], f.mul(c, images[i][k]));
            }
        }
        out
    };
    let mut vs: Vec<Vec<FqElem>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    for _ in 0..n_iter {
        vs = vs.iter().map(|v| apply(v)).collect();
    }
    row_reduce_fq(f, &mut vs);
    let mut stable: Vec<CentralElement> = vs.into_iter().map(|c| CentralElement::new(field, group, c).unwrap()).collect();
    for s in &stable {
        if s.pow(f.size()) != *s {
            return Err(Error::SplittingField(format!(
                "center of F_{} {} is not split (Frobenius does not fix its semisimple part)",
                f.size(),
                group.describe()
            )));
        }
    }
    if let Some(os) = order_seed {
        stable.shuffle(&mut ChaCha8Rng::seed_from_u64(os));
    }
    let dim = stable.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = Vec::new();
    let mut todo = vec![CentralElement::one(field, group)];
    while let Some(e) = todo.pop() {
        let local: Vec<CentralElement> = stable.iter().map(|s| e.mul(s).unwrap()).collect();
        let d = rank_fq(f, &local.iter().map(vec_of).collect::<Vec<_>>());
        if d == 1 {
            done.push(e);
            continue;
        }
        let mut split = None;
        for _ in 0..64 {
            let mut s = CentralElement::zero(field, group);
            for b in &local {
                s = s.add(&b.scale(rng.gen_range(0..f.size() as u32))).unwrap();
            }
            let parts = split_by(&e, &s, d, &mut rng)?;
            if parts.len() > 1 {
                split = Some(parts);
                break;
            }
        }
        match split {
            Some(parts) => todo.extend(parts),
            None => return Err(Error::Internal("failed to split a central idempotent".into())),
        }
    }
    if done.len() != dim {
        return Err(Error::Internal(format!("found {} blocks, semisimple center has dimension {dim}", done.len())));
    }
    done.sort_by(|a, b| {
        let pa = a.augmentation() != 1;
        let pb = b.augmentation() != 1;
        (pa, &a.coeffs).cmp(&(pb, &b.coeffs))
    });
    Ok(done)
}

/// Splits `e` along the eigenvalues of `s` in `e Z`: the Lagrange
/// idempotents of the roots of the minimal polynomial of `s`.
fn split_by(e: &CentralElement, s: &CentralElement, dim: usize, rng: &mut ChaCha8Rng) -> Result<Vec<CentralElement>> {
    let f = e.field.clone();
    let mut powers = vec![e.clone()];
    let minpoly = loop {
        let next = powers.last().unwrap().mul(s)?;
        let vecs: Vec<Vec<FqElem>> = powers.iter().map(vec_of).collect();
        if let Some(c) = solve_fq(&f, &vecs, &next.coeffs) {
            let mut coeffs: Vec<FqElem> = c.iter().map(|&a| f.neg(a)).collect();
            coeffs.push(1);
            break FqPoly::new(coeffs);
        }
        powers.push(next);
        if powers.len() > dim + 1 {
            return Err(Error::Internal("minimal polynomial degree exceeds dimension".into()));
        }
    };
    let rs = roots(&f, &minpoly, rng)?;
    if rs.len() as isize != minpoly.degree() {
        return Err(Error::SplittingField(format!(
            "minimal polynomial of a central element does not split into distinct linear factors over F_{}",
            f.size()
        )));
    }
    if rs.len() == 1 {
        return Ok(vec![e.clone()]);
    }
    let mut parts = Vec::new();
    for (j, &lj) in rs.iter().enumerate() {
        let mut acc = e.clone();
        for (i, &li) in rs.iter().enumerate() {
            if i == j {
                continue;
            }
            let num = s.sub(&e.scale(li))?;
            let den = f.inv(f.sub(lj, li))?;
            acc = acc.mul(&num)?.scale(den);
        }
        parts.push(acc);
    }
    Ok(parts)
}

/// Whether `br_P(b) != 0`.
pub fn brauer_nonzero(b: &CentralElement, p: &Subgroup) -> bool {
    let c = b.group().centralizer(p);
    c.conjugacy_classes().classes.iter().any(|cl| b.coeff(cl[0]) != 0)
}

/// The defect group: a `p`-subgroup `D` of largest order with
/// `br_D(b) != 0`, returned as the canonical representative of its class.
/// Every `p`-subgroup with nonvanishing Brauer image is checked to be
/// subconjugate to it.
pub fn defect_group(b: &CentralElement, p: u64) -> Result<Subgroup> {
    let g = b.group();
    let cands: Vec<Subgroup> = g.p_subgroups(p).into_iter().filter(|s| brauer_nonzero(b, s)).collect();
    let d = cands
        .iter()
        .max_by_key(|s| s.order())
        .cloned()
        .ok_or_else(|| Error::Blocks("Brauer image vanishes at the trivial subgroup".into()))?;
    let conjugates: Vec<Subgroup> = g.elements().iter().map(|&x| d.conjugate(x)).collect();
    for s in &cands {
        if !conjugates.iter().any(|c| s.is_subgroup_of(c)) {
            return Err(Error::Invariant(format!(
                "p-subgroups {} and {} both support the block but are not nested up to conjugacy",
                s.describe(),
                d.describe()
            )));
        }
    }
    Ok(d)
}

/// The blocks `e` of `F_q C_G(D)` with `br_D(b) e != 0`, in block order.
pub fn brauer_pair_candidates(b: &CentralElement, d: &Subgroup, seed: u64) -> Result<Vec<CentralElement>> {
    let br = b.brauer(d)?;
    let c = br.group().clone();
    let mut out = Vec::new();
    for e in block_idempotents(b.field(), &c, seed)? {
        if !br.mul(&e)?.is_zero() {
            out.push(e);
        }
    }
    Ok(out)
}

/// A maximal `b`-Brauer pair `(D, e)`: the first candidate block.
pub fn maximal_brauer_pair(b: &CentralElement, d: &Subgroup, seed: u64) -> Result<(Subgroup, CentralElement)> {
    let e = brauer_pair_candidates(b, d, seed)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Blocks(format!("no block of C_G(D) for D = {}", d.describe())))?;
    Ok((d.clone(), e))
}

/// `dim V` for the unique simple module of the image of `F_q C_G(D) e` in
/// `F_q[C_G(D)/Z(D)]`: the square root of the dimension of that block.
pub fn defect_zero_simple_dim(d: &Subgroup, e: &CentralElement) -> Result<usize> {
    let c = e.group();
    let z = d.center();
    if !z.is_subgroup_of(c) {
        return Err(Error::Blocks("defect_zero_simple_dim: e must be a block of C_G(D)".into()));
    }
    let (qg, pi) = c.quotient(&z)?;
    let f = e.field();
    let q = Subgroup::full(&qg);
    let mut img = vec![0; q.order()];
    for &g in c.elements() {
        let k = q.position(pi.apply(g)).unwrap();
        img[k] = f.add(img[k], e.coeff(g));
    }
    let img = GroupAlgebraElem { field: f.clone(), group: q.clone(), coeffs: img };
    if img.is_zero() || img.mul(&img)? != img {
        return Err(Error::Blocks("image of e in the quotient by Z(D) is not a nonzero idempotent".into()));
    }
    let rows: Vec<Vec<FqElem>> = q
        .elements()
        .iter()
        .map(|&y| img.mul(&GroupAlgebraElem::from_fn(f, &q, |x| (x == y) as FqElem)).unwrap().coeffs)
        .collect();
    let dim = rank_fq(f, &rows);
    let root = (dim as f64).sqrt().round() as usize;
    if root * root != dim {
        return Err(Error::SplittingField(format!(
            "block of the quotient has dimension {dim}, not a square; enlarge the field"
        )));
    }
    Ok(root)
}

/// `omega_chi(K) = |K| chi(g_K) / chi(1)` reduced into `F_q`, per class.
pub fn central_character(field: &Field, chi: &crate::charmod::ClassFunction) -> Result<Vec<FqElem>> {
    let g = chi.group();
    let cc = g.conjugacy_classes();
    let deg = chi
        .degree()
        .to_integer()
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::CharacterTable("central character of a non-character".into()))?;
    (0..cc.len())
        .map(|i| field.reduce(&chi.values()[i].scale(Rational::new(cc.size(i) as i128, deg))))
        .collect()
}

/// Block index of each irreducible character: `chi` lies in `b` iff `omega_chi(b) = 1`.
pub fn assign_characters_to_blocks(table: &CharacterTable, blocks: &[CentralElement]) -> Result<Vec<usize>> {
    let Some(first) = blocks.first() else {
        return Err(Error::Blocks("no blocks".into()));
    };
    if table.group() != first.group() {
        return Err(Error::AmbientMismatch("table and blocks belong to different groups".into()));
    }
    let f = first.field();
    let mut out = Vec::new();
    for (ci, chi) in table.irr().iter().enumerate() {
        let omega = central_character(f, chi)?;
        let hits: Vec<usize> = blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| {
                b.coeffs.iter().zip(&omega).fold(0, |acc, (&x, &w)| f.add(acc, f.mul(x, w))) == 1
            })
            .map(|(i, _)| i)
            .collect();
        if hits.len() != 1 {
            return Err(Error::Blocks(format!(
                "character {} lies in {} blocks; the reduction map is inconsistent",
                table.name_of(ci),
                hits.len()
            )));
        }
        out.push(hits[0]);
    }
    Ok(out)
}

/// Partition of `Irr(G)` by equality of reduced central characters.
pub fn central_character_partition(table: &CharacterTable, field: &Field) -> Result<Vec<Vec<usize>>> {
    let mut by: BTreeMap<Vec<FqElem>, Vec<usize>> = BTreeMap::new();
    for (i, chi) in table.irr().iter().enumerate() {
        by.entry(central_character(field, chi)?).or_default().push(i);
    }
    let mut parts: Vec<Vec<usize>> = by.into_values().collect();
    parts.sort();
    Ok(parts)
}

/// Per block: idempotent, defect group, chosen maximal Brauer pair, `dim V`
/// of the pair, and its ordinary characters (when a table is supplied).
#[derive(Clone, Debug)]
pub struct BlockData {
    pub index: usize,
    pub idempotent: CentralElement,
    pub defect_group: Subgroup,
    pub maximal_pair: (Subgroup, CentralElement),
    pub simple_dim_local: usize,
    pub characters: Vec<usize>,
}

/// Knobs that must not change any invariant.
#[derive(Clone, Copy, Debug, Default)]
pub struct BlockOptions {
    pub seed: u64,
    /// Permutes the basis used to split idempotents.
    pub order_seed: Option<u64>,
    /// Picks a random conjugate of the defect group and a random admissible
    /// block of its centralizer for the maximal pair.
    pub pair_seed: Option<u64>,
}

impl BlockData {
    pub fn is_principal(&self) -> bool {
        self.idempotent.augmentation() == 1
    }
}

pub fn analyze_blocks(
    field: &Arc<Field>,
    group: &Subgroup,
    table: Option<&CharacterTable>,
    opts: BlockOptions,
) -> Result<Vec<BlockData>> {
    let p = field.characteristic();
    let idems = block_idempotents_with(field, group, opts.seed, opts.order_seed)?;
    let chars = match table {
        Some(t) => assign_characters_to_blocks(t, &idems)?,
        None => vec![],
    };
    let mut out = Vec::new();
    for (index, b) in idems.into_iter().enumerate() {
        let d = defect_group(&b, p)?;
        let (dd, e) = match opts.pair_seed {
            None => maximal_brauer_pair(&b, &d, opts.seed)?,
            Some(s) => {
                let mut rng = ChaCha8Rng::seed_from_u64(s ^ index as u64);
                let g = *group.elements().choose(&mut rng).unwrap();
                let dg = d.conjugate(g);
                let mut cands = brauer_pair_candidates(&b, &dg, opts.seed)?;
                cands.shuffle(&mut rng);
                let e = cands.into_iter().next().ok_or_else(|| Error::Blocks("no Brauer pair candidate".into()))?;
                (dg, e)
            }
        };
        let simple_dim_local = defect_zero_simple_dim(&dd, &e)?;
        let characters = chars.iter().enumerate().filter(|(_, &bi)| bi == index).map(|(i, _)| i).collect();
        out.push(BlockData { index, idempotent: b, defect_group: d, maximal_pair: (dd, e), simple_dim_local, characters });
    }
    Ok(out)
}

/// The block `c` of `N_G(D)` with `br_D(c) = br_D(b)`.
pub fn brauer_correspondent(b: &CentralElement, d: &Subgroup, seed: u64) -> Result<(Subgroup, CentralElement)> {
    let n = b.group().normalizer(d);
    let target = b.brauer(d)?;
    for c in block_idempotents(b.field(), &n, seed)? {
        let bc = c.brauer(d)?;
        if bc.on(target.group()) == target {
            return Ok((n, c));
        }
    }
    Err(Error::Blocks("no Brauer correspondent found".into()))
}

/// The Brauer construction of one transitive term `coefficient * [(G x H)/X]`
/// at `P`: the `P`-fixed cosets with the action of the full product.
#[derive(Clone)]
pub struct BrauerTerm {
    pub coefficient: i64,
    pub vertex: ProductSubgroup,
    pub action: GAction,
    pub fixed: Vec<Point>,
}

pub fn brauer_construction(terms: &[(ProductSubgroup, i64)], p: &Subgroup) -> Result<Vec<BrauerTerm>> {
    let mut out = Vec::new();
    for (x, coefficient) in terms {
        let full = Subgroup::full(x.ambient());
        if !p.is_subgroup_of(&full) {
            return Err(Error::NotASubgroup("brauer_construction: P must lie in the product".into()));
        }
        let action = GAction::coset_action(&full, x.subgroup())?;
        let fixed = (0..action.size() as Point)
            .filter(|&pt| p.generators().iter().all(|&g| action.act(g, pt) == pt))
            .collect();
        out.push(BrauerTerm { coefficient: *coefficient, vertex: x.clone(), action, fixed });
    }
    Ok(out)
}

impl BrauerTerm {
    /// Rank of `m -> e m f` on the fixed-coset space, where `e` and `f` are
    /// central idempotents of `F_q C_G(D)` and `F_q C_H(E)`.
    pub fn projected_rank(&self, e: &CentralElement, f: &CentralElement) -> Result<usize> {
        let amb = self.vertex.ambient();
        let field = e.field();
        let idx: BTreeMap<Point, usize> = self.fixed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = self.fixed.len();
        let mut rows = vec![vec![0; n]; n];
        let ge: Vec<(Elem, FqElem)> =
            e.group().elements().iter().map(|&g| (g, e.coeff(g))).filter(|&(_, c)| c != 0).collect();
        let hf: Vec<(Elem, FqElem)> =
            f.group().elements().iter().map(|&h| (h, f.coeff(h))).filter(|&(_, c)| c != 0).collect();
        let rg = amb.factors().map(|(_, r)| r.clone()).ok_or_else(|| Error::Internal("vertex ambient is not a product".into()))?;
        for &(g, a) in &ge {
            for &(h, c) in &hf {
                let z = amb.pair(g, rg.inv(h));
                let w = field.mul(a, c);
                for (i, &x) in self.fixed.iter().enumerate() {
                    let y = self.action.act(z, x);
                    let j = *idx.get(&y).ok_or_else(|| {
                        Error::Blocks("centralizers do not preserve the fixed cosets".into())
                    })?;
                    rows[i][j] = field.add(rows[i][j], w);
                }
            }
        }
        Ok(rank_fq(field, &rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, group_from_cycle_strings, symmetric};

    fn field_for(g: &Subgroup, p: u64) -> Arc<Field> {
        Arc::new(Field::splitting(g.ambient().exponent(), p).unwrap())
    }

    fn check_axioms(blocks: &[CentralElement]) {
        let g = blocks[0].group();
        let f = blocks[0].field();
        let mut sum = CentralElement::zero(f, g);
        for (i, a) in blocks.iter().enumerate() {
            assert!(a.is_idempotent());
            for b in &blocks[i + 1..] {
                assert!(a.mul(b).unwrap().is_zero());
            }
            sum = sum.add(a).unwrap();
        }
        assert_eq!(sum, CentralElement::one(f, g));
    }

    #[test]
    fn s3_blocks() {
        let g = Subgroup::full(&symmetric(3));
        let f2 = field_for(&g, 2);
        let b2 = block_idempotents(&f2, &g, 1).unwrap();
        assert_eq!(b2.len(), 2);
        check_axioms(&b2);
        assert_eq!(defect_group(&b2[0], 2).unwrap().order(), 2);
        assert_eq!(defect_group(&b2[1], 2).unwrap().order(), 1);
        let f3 = field_for(&g, 3);
        let b3 = block_idempotents(&f3, &g, 1).unwrap();
        assert_eq!(b3.len(), 1);
        assert_eq!(defect_group(&b3[0], 3).unwrap().order(), 3);
        let c3 = g.sylow(3);
        assert!(brauer_nonzero(&b3[0], &c3));
    }

    #[test]
    fn p_groups_have_one_block() {
        let g = Subgroup::full(&cyclic(4));
        let f = field_for(&g, 2);
        let b = block_idempotents(&f, &g, 3).unwrap();
        assert_eq!(b, vec![CentralElement::one(&f, &g)]);
        assert_eq!(defect_group(&b[0], 2).unwrap(), g);
        let (d, e) = maximal_brauer_pair(&b[0], &g, 0).unwrap();
        assert_eq!(d, g);
        assert!(e.is_idempotent());
        assert_eq!(defect_zero_simple_dim(&d, &e).unwrap(), 1);
    }

    #[test]
    fn idempotents_independent_of_basis_order() {
        let g = Subgroup::full(&group_from_cycle_strings("A4", &["(1,2,3)", "(1,2)(3,4)"]).unwrap());
        for p in [2, 3] {
            let f = field_for(&g, p);
            let a = block_idempotents(&f, &g, 1).unwrap();
            let b = block_idempotents_with(&f, &g, 99, Some(5)).unwrap();
            assert_eq!(a, b);
            check_axioms(&a);
        }
    }

    #[test]
    fn brauer_hom_is_multiplicative_on_fixed_points() {
        let g = Subgroup::full(&symmetric(4));
        let f = field_for(&g, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in g.p_subgroups(2) {
            for _ in 0..3 {
                let x = random_fixed_element(&f, &g, &d, &mut rng);
                let y = random_fixed_element(&f, &g, &d, &mut rng);
                let lhs = x.mul(&y).unwrap().brauer(&d).unwrap();
                let rhs = x.brauer(&d).unwrap().mul(&y.brauer(&d).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn defect_zero_dimension_for_s3() {
        let g = Subgroup::full(&symmetric(3));
        let f = field_for(&g, 2);
        let blocks = block_idempotents(&f, &g, 1).unwrap();
        let d = Subgroup::trivial(g.ambient());
        let (_, e) = maximal_brauer_pair(&blocks[1], &d, 0).unwrap();
        assert_eq!(defect_zero_simple_dim(&d, &e).unwrap(), 2);
    }
}
