//! Perfect isometries from virtual permutation bimodules, the Broué
//! invariant, the local invariant `b(B, C)` built from maximal Brauer
//! pairs, the sign of a virtual p-permutation bimodule, and the check
//! `beta(gamma) = epsilon(gamma) * beta(B, C)`.

use std::sync::Arc;

use serde::Serialize;

use crate::arith::p_part;
use crate::blocks::{analyze_blocks, brauer_construction, BlockData, BlockOptions, CentralElement};
use crate::charmod::{contract_middle, CharacterTable, ClassFunction};
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{Elem, FiniteGroup, GroupHom, Subgroup};
use crate::subdirect::ProductSubgroup;

/// Residue of a `p`-integral rational modulo `p`.
pub fn residue_mod(q: &Rational, p: u64) -> Option<u64> {
    let p = p as i128;
    let den = q.denom().rem_euclid(p);
    if den == 0 {
        return None;
    }
    let inv = crate::arith::mod_inverse(den as i64, p as i64)? as i128;
    Some((q.numer().rem_euclid(p) * inv).rem_euclid(p) as u64)
}

/// Residue written in the symmetric range, e.g. `p - 1` as `-1`.
pub fn signed_residue(r: u64, p: u64) -> i64 {
    if p > 2 && r > p / 2 {
        r as i64 - p as i64
    } else {
        r as i64
    }
}

fn is_p_unit(q: &Rational, p: u64) -> bool {
    let p = p as i128;
    *q.numer() != 0 && q.numer().rem_euclid(p) != 0 && q.denom().rem_euclid(p) != 0
}

/// Group, character table, field and block data on one side.
#[derive(Clone, Debug)]
pub struct BlockContext {
    pub group: Arc<FiniteGroup>,
    pub table: CharacterTable,
    pub field: Arc<Field>,
    pub blocks: Vec<BlockData>,
}

impl BlockContext {
    pub fn new(table: CharacterTable, field: &Arc<Field>, opts: BlockOptions) -> Result<BlockContext> {
        let group = table.group().ambient().clone();
        if !table.group().is_full() {
            return Err(Error::CharacterTable("table must be for the whole group".into()));
        }
        let blocks = analyze_blocks(field, table.group(), Some(&table), opts)?;
        Ok(BlockContext { group, table, field: field.clone(), blocks })
    }

    pub fn full(&self) -> &Subgroup {
        self.table.group()
    }

    pub fn block(&self, i: usize) -> Result<&BlockData> {
        self.blocks.get(i).ok_or_else(|| Error::Schema(format!("block index {i} out of range ({} blocks)", self.blocks.len())))
    }

    /// Index of the block containing the named ordinary character.
    pub fn block_of_character(&self, name: &str) -> Result<usize> {
        let ci = self
            .table
            .index_of(name)
            .ok_or_else(|| Error::Schema(format!("no character named {name:?}")))?;
        self.blocks
            .iter()
            .position(|b| b.characters.contains(&ci))
            .ok_or_else(|| Error::Internal(format!("character {name} has no block")))
    }
}

/// Integer combination of transitive bisets `(G x H)/X`, each read as the
/// block-projected permutation bimodule `b F[(G x H)/X] c`.
#[derive(Clone, Debug, PartialEq)]
pub struct VirtualPPermBimodule {
    terms: Vec<(ProductSubgroup, i64)>,
}

impl VirtualPPermBimodule {
    /// Terms must share one ambient product and be twisted diagonals.
    pub fn new(terms: Vec<(ProductSubgroup, i64)>) -> Result<VirtualPPermBimodule> {
        if let Some((first, _)) = terms.first() {
            for (x, _) in &terms {
                if !x.ambient().same_as(first.ambient()) {
                    return Err(Error::AmbientMismatch("terms live in different products".into()));
                }
                if !x.is_twisted_diagonal() {
                    return Err(Error::Biset(format!("vertex {} is not a twisted diagonal", x.subgroup().describe())));
                }
            }
        }
        Ok(VirtualPPermBimodule { terms })
    }

    pub fn terms(&self) -> &[(ProductSubgroup, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| *c == 0)
    }

    pub fn negate(&self) -> VirtualPPermBimodule {
        VirtualPPermBimodule { terms: self.terms.iter().map(|(x, c)| (x.clone(), -c)).collect() }
    }

    /// Whether every vertex is `Delta(P, phi, Q)` with `P`, `Q` `p`-groups.
    pub fn has_p_vertices(&self, p: u64) -> bool {
        self.terms.iter().all(|(x, _)| p_part(x.order() as u64, p) == x.order() as u64)
    }

    /// Coefficients merged over conjugate vertices; zero terms dropped.
    pub fn merged(&self) -> VirtualPPermBimodule {
        let mut out: Vec<(ProductSubgroup, i64)> = Vec::new();
        for (x, c) in &self.terms {
            let full = Subgroup::full(x.ambient());
            match out.iter_mut().find(|(y, _)| full.are_conjugate(y.subgroup(), x.subgroup())) {
                Some(slot) => slot.1 += c,
                None => out.push((x.clone(), *c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        VirtualPPermBimodule { terms: out }
    }
}

/// Alternating sum `sum (-1)^n [X_n]` of a bounded complex given degree by degree.
pub fn rickard_reduce(complex: &[(i64, VirtualPPermBimodule)]) -> Result<VirtualPPermBimodule> {
    let mut terms = Vec::new();
    for (deg, x) in complex {
        let sign = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
        terms.extend(x.terms.iter().map(|(y, c)| (y.clone(), sign * c)));
    }
    Ok(VirtualPPermBimodule::new(terms)?.merged())
}

/// `mu` in the span of `Irr(B) x Irr(C)*`, a class function on `G x H`.
#[derive(Clone, Debug)]
pub struct VirtualBimoduleCharacter {
    pub mu: ClassFunction,
    /// `(chi, psi, multiplicity)` of `chi x psi*` with nonzero multiplicity.
    pub constituents: Vec<(usize, usize, i64)>,
}

/// Both sides of a pair of blocks `(B, C)` for `(G, H)`.
#[derive(Clone, Debug)]
pub struct BrouePair {
    pub g: BlockContext,
    pub h: BlockContext,
    pub b: usize,
    pub c: usize,
}

impl BrouePair {
    pub fn p(&self) -> u64 {
        self.g.field.characteristic()
    }

    pub fn product(&self) -> Arc<FiniteGroup> {
        FiniteGroup::product(&self.g.group, &self.h.group)
    }

    fn irr_b(&self) -> &[usize] {
        &self.g.blocks[self.b].characters
    }

    fn irr_c(&self) -> &[usize] {
        &self.h.blocks[self.c].characters
    }
}

/// `kappa(gamma)`: block-projected permutation characters, decomposed over
/// `Irr(B) x Irr(C)*` with multiplicities `<1_X, (chi x psi*)|_X>`.
pub fn kappa(pair: &BrouePair, gamma: &VirtualPPermBimodule) -> Result<VirtualBimoduleCharacter> {
    let gh = pair.product();
    let full = Subgroup::full(&gh);
    let mut mult = vec![vec![0i64; pair.h.table.len()]; pair.g.table.len()];
    for (x, coeff) in gamma.terms() {
        if !x.ambient().same_as(&gh) {
            return Err(Error::AmbientMismatch("gamma does not live in G x H".into()));
        }
        for &ci in pair.irr_b() {
            let chi = &pair.g.table.irr()[ci];
            for &pi in pair.irr_c() {
                let psi = &pair.h.table.irr()[pi];
                let mut acc = Cyclotomic::zero();
                for (g, h) in x.pairs() {
                    acc += &(&chi.value(g).conj() * psi.value(h));
                }
                let m = acc.scale(Rational::new(1, x.order() as i128));
                let m = m.to_integer().ok_or_else(|| {
                    Error::NotVirtualCharacter(format!("multiplicity {m} is not an integer; table does not match its group"))
                })?;
                mult[ci][pi] += coeff * m as i64;
            }
        }
    }
    let mut mu = ClassFunction::zero(&full);
    let mut constituents = Vec::new();
    for (ci, row) in mult.iter().enumerate() {
        for (pi, &m) in row.iter().enumerate() {
            if m != 0 {
                let term = pair.g.table.irr()[ci].outer(&pair.h.table.irr()[pi].dual());
                let term = ClassFunction::new(&full, term.values().to_vec())?;
                mu = mu.add(&term.scale_int(m))?;
                constituents.push((ci, pi, m));
            }
        }
    }
    Ok(VirtualBimoduleCharacter { mu, constituents })
}

/// Violations of the two perfectness conditions.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct PerfectReport {
    pub integrality_violations: Vec<String>,
    pub support_violations: Vec<String>,
}

impl PerfectReport {
    pub fn is_perfect(&self) -> bool {
        self.integrality_violations.is_empty() && self.support_violations.is_empty()
    }
}

/// `mu(g,h)/|C_G(g)|` and `mu(g,h)/|C_H(h)|` must be `p`-integral, and
/// `mu(g,h) = 0` unless `g` and `h` are both `p'` or both not.
pub fn check_perfect(mu: &ClassFunction, p: u64) -> Result<PerfectReport> {
    let amb = mu.group().ambient().clone();
    let (gg, hh) = amb.factors().ok_or_else(|| Error::AmbientMismatch("mu must live on a product".into()))?;
    let (gs, hs) = (Subgroup::full(gg), Subgroup::full(hh));
    let cc = mu.group().conjugacy_classes();
    let mut rep = PerfectReport::default();
    for i in 0..cc.len() {
        let (g, h) = amb.split(cc.rep(i));
        let v = &mu.values()[i];
        if v.is_zero() {
            continue;
        }
        let cg = gs.order() / gs.conjugacy_classes().size(gs.class_index(g));
        let ch = hs.order() / hs.conjugacy_classes().size(hs.class_index(h));
        let label = || format!("({}, {})", gg.label(g), hh.label(h));
        for (c, side) in [(cg, "C_G(g)"), (ch, "C_H(h)")] {
            if !v.scale(Rational::new(1, c as i128)).is_p_integral(p) {
                rep.integrality_violations.push(format!("mu{} / |{side}| = {v} / {c} is not {p}-integral", label()));
            }
        }
        if gg.is_p_prime_element(g, p) != hh.is_p_prime_element(h, p) {
            rep.support_violations.push(format!("mu{} = {v} but exactly one entry is {p}-regular", label()));
        }
    }
    Ok(rep)
}

/// `I_mu(psi) = sign * alpha(psi)` for each `psi` in `Irr(C)`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Isometry {
    /// `(psi, chi, sign)` by table index.
    pub images: Vec<(usize, usize, i64)>,
}

pub fn check_isometry(pair: &BrouePair, mu: &ClassFunction) -> Result<Isometry> {
    let mut images = Vec::new();
    for &pi in pair.irr_c() {
        let psi = &pair.h.table.irr()[pi];
        let image = contract_middle(mu, psi)?;
        let hit = pair.irr_b().iter().find_map(|&ci| {
            let chi = &pair.g.table.irr()[ci];
            if image == *chi {
                Some((ci, 1))
            } else if image == chi.scale_int(-1) {
                Some((ci, -1))
            } else {
                None
            }
        });
        match hit {
            Some((ci, s)) => images.push((pi, ci, s)),
            None => {
                return Err(Error::NotIsometry(format!(
                    "image of {} is not plus or minus an irreducible character of B",
                    pair.h.table.name_of(pi)
                )))
            }
        }
    }
    let mut targets: Vec<usize> = images.iter().map(|t| t.1).collect();
    targets.sort();
    targets.dedup();
    if targets.len() != images.len() || targets.len() != pair.irr_b().len() {
        return Err(Error::NotIsometry("the induced map Irr(C) -> Irr(B) is not a bijection".into()));
    }
    Ok(Isometry { images })
}

/// Common residue of the ratios `(|G| / I(psi)(1)) / (|H| / psi(1))`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BroueInvariant {
    pub value: u64,
    pub ratios: Vec<(String, String)>,
}

pub fn broue_invariant(pair: &BrouePair, iso: &Isometry) -> Result<BroueInvariant> {
    let p = pair.p();
    let (ng, nh) = (pair.g.group.order() as i128, pair.h.group.order() as i128);
    let mut value = None;
    let mut ratios = Vec::new();
    for &(pi, ci, s) in &iso.images {
        let dpsi = pair.h.table.irr()[pi].degree().to_integer().unwrap();
        let dchi = pair.g.table.irr()[ci].degree().to_integer().unwrap() * s as i128;
        let ratio = Rational::new(ng * dpsi, nh * dchi);
        ratios.push((pair.h.table.name_of(pi).to_string(), crate::cyclotomic::fmt_rational(&ratio)));
        if !is_p_unit(&ratio, p) {
            return Err(Error::Invariant(format!("ratio {ratio} for {} is not a {p}-unit", pair.h.table.name_of(pi))));
        }
        let r = residue_mod(&ratio, p).unwrap();
        match value {
            None => value = Some(r),
            Some(v) if v != r => {
                return Err(Error::Invariant(format!("ratio residues disagree: {v} and {r} modulo {p}")));
            }
            _ => {}
        }
    }
    let value = value.ok_or_else(|| Error::Invariant("block C has no characters".into()))?;
    Ok(BroueInvariant { value, ratios })
}

/// `b(B, C)` and its residue.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LocalInvariant {
    pub numerator: u64,
    pub denominator: u64,
    pub value: String,
    pub residue: u64,
}

/// `|C_G(D)/Z(D)| / dim V` for a block's chosen maximal pair.
pub fn local_factor(bd: &BlockData, p: u64) -> Result<u64> {
    let (d, e) = &bd.maximal_pair;
    let quotient = e.group().order() / d.center().order();
    if quotient % bd.simple_dim_local != 0 {
        return Err(Error::Internal("dim V does not divide |C_G(D)/Z(D)|".into()));
    }
    let n = (quotient / bd.simple_dim_local) as u64;
    if n % p == 0 {
        return Err(Error::Blocks(format!(
            "|C_G(D)/Z(D)|/dim V = {n} is divisible by {p}; the pair is not of defect zero"
        )));
    }
    Ok(n)
}

pub fn local_invariant(bd: &BlockData, cd: &BlockData, p: u64) -> Result<LocalInvariant> {
    let numerator = local_factor(bd, p)?;
    let denominator = local_factor(cd, p)?;
    let q = Rational::new(numerator as i128, denominator as i128);
    Ok(LocalInvariant {
        numerator,
        denominator,
        value: crate::cyclotomic::fmt_rational(&q),
        residue: residue_mod(&q, p).unwrap(),
    })
}

/// Isomorphisms `E -> D` in lexicographic order of generator images.
pub fn isomorphisms(e: &Subgroup, d: &Subgroup) -> Vec<GroupHom> {
    if e.order() != d.order() {
        return vec![];
    }
    let gens = e.generators().to_vec();
    let mut out = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    let del = d.elements();
    loop {
        let assignment: Vec<(Elem, Elem)> = gens.iter().zip(&idx).map(|(&g, &i)| (g, del[i])).collect();
        if let Ok(phi) = GroupHom::from_generator_images(e, d, &assignment) {
            if phi.is_isomorphism() {
                out.push(phi);
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < del.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Signed rank of `e (x) f*` on the Brauer construction at `Delta(D, phi, E)`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SignData {
    pub epsilon: i64,
    pub total: i64,
    /// `(generator of E, image in D)` labels for the chosen `phi`.
    pub phi: Vec<(String, String)>,
    pub term_ranks: Vec<(i64, usize)>,
}

pub fn sign_of_gamma(gamma: &VirtualPPermBimodule, bd: &BlockData, cd: &BlockData) -> Result<SignData> {
    let (d, e) = &bd.maximal_pair;
    let (ee, f) = &cd.maximal_pair;
    let Some((x0, _)) = gamma.terms().first() else {
        return Err(Error::Sign("gamma is zero".into()));
    };
    let amb = x0.ambient().clone();
    let (gg, hh) = amb.factors().map(|(a, b)| (a.clone(), b.clone())).unwrap();
    for phi in isomorphisms(ee, d) {
        let delta = ProductSubgroup::twisted_diagonal(d, &phi, ee)?;
        let delta = ProductSubgroup::new(Subgroup::from_elements(&amb, delta.subgroup().elements())?)?;
        let bc = brauer_construction(gamma.terms(), delta.subgroup())?;
        if bc.iter().all(|t| t.fixed.is_empty()) {
            continue;
        }
        let mut total = 0i64;
        let mut term_ranks = Vec::new();
        for t in &bc {
            let r = if t.fixed.is_empty() { 0 } else { t.projected_rank(e, f)? };
            term_ranks.push((t.coefficient, r));
            total += t.coefficient * r as i64;
        }
        if total != 0 {
            let phi_desc = ee.generators().iter().map(|&y| (hh.label(y), gg.label(phi.apply(y)))).collect();
            return Ok(SignData { epsilon: total.signum(), total, phi: phi_desc, term_ranks });
        }
    }
    Err(Error::Sign("no twisted diagonal Delta(D, phi, E) has a nonzero projected Brauer construction".into()))
}

/// Degrees of height-zero characters: `chi(1)_p = [G:D]_p` for every
/// character of a block with abelian defect group.
pub fn height_zero_check(ctx: &BlockContext, block: usize) -> Option<bool> {
    let bd = &ctx.blocks[block];
    if !bd.defect_group.is_abelian() {
        return None;
    }
    let p = ctx.field.characteristic();
    let idx = p_part((ctx.group.order() / bd.defect_group.order()) as u64, p);
    Some(bd.characters.iter().all(|&c| {
        let deg = ctx.table.irr()[c].degree().to_integer().unwrap() as u64;
        p_part(deg, p) == idx
    }))
}

/// Everything computed for one scenario.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MainVerdict {
    pub p: u64,
    pub field_size: u64,
    pub perfect: PerfectReport,
    pub isometry: Vec<(String, String, i64)>,
    pub beta_gamma: u64,
    pub beta_ratios: Vec<(String, String)>,
    pub defect_group_b: String,
    pub defect_group_c: String,
    pub dim_v: usize,
    pub dim_w: usize,
    pub local: LocalInvariant,
    pub sign: SignData,
    pub holds: bool,
    pub heights_ok: Option<bool>,
    pub vertices_are_p_groups: bool,
}

pub fn verify_main_theorem(pair: &BrouePair, gamma: &VirtualPPermBimodule) -> Result<MainVerdict> {
    let p = pair.p();
    let kap = kappa(pair, gamma)?;
    let perfect = check_perfect(&kap.mu, p)?;
    let iso = check_isometry(pair, &kap.mu)?;
    let beta = broue_invariant(pair, &iso)?;
    let bd = pair.g.block(pair.b)?;
    let cd = pair.h.block(pair.c)?;
    let local = local_invariant(bd, cd, p)?;
    let sign = sign_of_gamma(gamma, bd, cd)?;
    let rhs = ((sign.epsilon.rem_euclid(p as i64) as u64) * local.residue) % p;
    let heights_ok = match (height_zero_check(&pair.g, pair.b), height_zero_check(&pair.h, pair.c)) {
        (Some(a), Some(b)) => Some(a && b),
        _ => None,
    };
    Ok(MainVerdict {
        p,
        field_size: pair.g.field.size(),
        perfect,
        isometry: iso
            .images
            .iter()
            .map(|&(pi, ci, s)| (pair.h.table.name_of(pi).to_string(), pair.g.table.name_of(ci).to_string(), s))
            .collect(),
        beta_gamma: beta.value,
        beta_ratios: beta.ratios,
        defect_group_b: bd.defect_group.describe(),
        defect_group_c: cd.defect_group.describe(),
        dim_v: bd.simple_dim_local,
        dim_w: cd.simple_dim_local,
        local,
        holds: beta.value == rhs,
        sign,
        heights_ok,
        vertices_are_p_groups: gamma.has_p_vertices(p),
    })
}

/// Block data recomputed with alternative orderings and pair choices.
pub fn with_options(pair: &BrouePair, opts: BlockOptions) -> Result<BrouePair> {
    Ok(BrouePair {
        g: BlockContext::new(pair.g.table.clone(), &pair.g.field, opts)?,
        h: BlockContext::new(pair.h.table.clone(), &pair.h.field, opts)?,
        b: pair.b,
        c: pair.c,
    })
}

/// The same pair over `F_{p^m}`; `m` must give a splitting field for both groups.
pub fn with_field_degree(pair: &BrouePair, m: u32, opts: BlockOptions) -> Result<BrouePair> {
    let field = Arc::new(Field::new(pair.p(), m)?);
    let exp = crate::arith::lcm(pair.g.group.exponent(), pair.h.group.exponent());
    let np = crate::arith::p_prime_part(exp, pair.p());
    if (field.size() - 1) % np != 0 {
        return Err(Error::SplittingField(format!("F_{} lacks roots of unity of order {np}", field.size())));
    }
    let g = BlockContext::new(pair.g.table.clone(), &field, opts)?;
    let h = BlockContext::new(pair.h.table.clone(), &field, opts)?;
    let b = match_block(&pair.g, pair.b, &g)?;
    let c = match_block(&pair.h, pair.c, &h)?;
    Ok(BrouePair { g, h, b, c })
}

/// Block of `new` with the same ordinary characters as block `i` of `old`.
fn match_block(old: &BlockContext, i: usize, new: &BlockContext) -> Result<usize> {
    let chars = &old.block(i)?.characters;
    new.blocks
        .iter()
        .position(|b| b.characters == *chars)
        .ok_or_else(|| Error::Internal("block partition changed with the field".into()))
}

/// Maps a central idempotent of `F_q H` along an embedding `H -> G` given
/// by matching permutations, for comparison with Brauer correspondents.
pub fn transport_central(e: &CentralElement, target: &Subgroup, map: &GroupHom) -> Result<CentralElement> {
    let cc = target.conjugacy_classes();
    let inv = map.inverse()?;
    let coeffs = (0..cc.len()).map(|i| e.coeff(inv.apply(cc.rep(i)))).collect();
    CentralElement::new(e.field(), target, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{bundled_table, load_group};
    use crate::io::GroupSpec;

    fn ctx(name: &str, p: u64) -> BlockContext {
        let t = bundled_table(name).unwrap();
        let f = Arc::new(Field::splitting(t.group().ambient().exponent(), p).unwrap());
        BlockContext::new(t, &f, BlockOptions::default()).unwrap()
    }

    fn identity_pair(name: &str, p: u64) -> (BrouePair, VirtualPPermBimodule) {
        let g = ctx(name, p);
        let h = g.clone();
        let pair = BrouePair { g, h, b: 0, c: 0 };
        let gh = pair.product();
        let full = Subgroup::full(&pair.g.group);
        let diag = ProductSubgroup::diagonal(&full);
        let diag = ProductSubgroup::new(Subgroup::from_elements(&gh, diag.subgroup().elements()).unwrap()).unwrap();
        (pair, VirtualPPermBimodule::new(vec![(diag, 1)]).unwrap())
    }

    #[test]
    fn identity_scenario_s3() {
        let (pair, gamma) = identity_pair("S3", 3);
        let v = verify_main_theorem(&pair, &gamma).unwrap();
        assert!(v.perfect.is_perfect());
        assert_eq!(v.beta_gamma, 1);
        assert_eq!(v.local.value, "1");
        assert_eq!(v.sign.epsilon, 1);
        assert!(v.holds);
        let neg = verify_main_theorem(&pair, &gamma.negate()).unwrap();
        assert_eq!(neg.beta_gamma, 2);
        assert_eq!(neg.sign.epsilon, -1);
        assert!(neg.holds);
    }

    #[test]
    fn scaled_character_is_not_an_isometry() {
        let (pair, gamma) = identity_pair("S3", 3);
        let kap = kappa(&pair, &gamma).unwrap();
        assert!(matches!(check_isometry(&pair, &kap.mu.scale_int(2)), Err(Error::NotIsometry(_))));
    }

    #[test]
    fn trivial_character_of_cp_is_not_perfect() {
        let (g, _) = load_group(&GroupSpec::Bundled { bundled: "C3".into() }).unwrap();
        let full = Subgroup::full(&g);
        let one = ClassFunction::trivial(&full);
        let mu = one.outer(&one);
        let r = check_perfect(&mu, 3).unwrap();
        assert!(!r.support_violations.is_empty());
    }

    #[test]
    fn rickard_shift_negates() {
        let (_, gamma) = identity_pair("S3", 3);
        let one = rickard_reduce(&[(0, gamma.clone())]).unwrap();
        assert_eq!(one, gamma);
        let shifted = rickard_reduce(&[(1, gamma.clone())]).unwrap();
        assert_eq!(shifted, gamma.negate());
        assert!(rickard_reduce(&[(0, gamma.clone()), (1, gamma)]).unwrap().is_zero());
    }

    #[test]
    fn residues() {
        assert_eq!(residue_mod(&Rational::new(4, 1), 3), Some(1));
        assert_eq!(residue_mod(&Rational::new(1, 2), 3), Some(2));
        assert_eq!(residue_mod(&Rational::new(1, 3), 3), None);
        assert_eq!(signed_residue(2, 3), -1);
    }
}
