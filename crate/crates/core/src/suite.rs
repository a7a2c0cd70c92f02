//! Seeded randomized verification of the biset laws and their character
//! level counterparts. Every instance compares two independent
//! constructions; failures are reported with a description of the instance.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::biset::{
    check_defres_induction, check_prop_defres, extended_induction_formula, extended_tensor, tensor_direct, tensor_mackey,
    BisetView,
};
use crate::charmod::{bouc_formula_sides, contract_extended, ClassFunction};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::gset::{iso_check, GAction};
use crate::io::bundled_table;
use crate::subdirect::{star, ProductSubgroup};

pub const BASE_GROUPS: &[&str] = &["C2", "C3", "C4", "C6", "S3", "D8", "Q8", "A4"];

/// Largest subgroup of a product drawn for the laws that build bisets over
/// products of subgroups.
const SMALL_SUBGROUP: usize = 12;

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub max_order: usize,
    /// Perturbs one side of every Mackey, induction formula, coherence and
    /// character comparison so that the harness must report failures.
    pub mutate: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 1, count: 100, max_order: 12, mutate: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instances: usize,
    pub passed: usize,
    pub counterexamples: Vec<String>,
}

impl LawReport {
    fn new(law: &str) -> LawReport {
        LawReport { law: law.into(), instances: 0, passed: 0, counterexamples: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.instances
    }

    fn record(&mut self, describe: impl FnOnce() -> String, outcome: Result<bool>) {
        self.instances += 1;
        let failure = match outcome {
            Ok(true) => {
                self.passed += 1;
                return;
            }
            Ok(false) => describe(),
            Err(e) => format!("{} (error: {e})", describe()),
        };
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(failure);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub max_order: usize,
    pub laws: Vec<LawReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawReport::ok)
    }

    pub fn instances(&self) -> usize {
        self.laws.iter().map(|l| l.instances).sum()
    }
}

/// The base groups of order at most `max_order`, with a seeded generator.
pub struct Sampler {
    groups: Vec<Arc<FiniteGroup>>,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, max_order: usize) -> Result<Sampler> {
        let mut groups = Vec::new();
        for name in BASE_GROUPS {
            let t = bundled_table(name)?;
            if t.group().order() <= max_order {
                groups.push(t.group().ambient().clone());
            }
        }
        if groups.is_empty() {
            return Err(Error::Schema(format!("no base group of order at most {max_order}")));
        }
        Ok(Sampler { groups, rng: ChaCha8Rng::seed_from_u64(seed) })
    }

    pub fn group(&mut self) -> Arc<FiniteGroup> {
        self.groups.choose(&mut self.rng).expect("nonempty pool").clone()
    }

    fn small_group(&mut self, bound: usize) -> Arc<FiniteGroup> {
        let small: Vec<_> = self.groups.iter().filter(|g| g.order() <= bound).cloned().collect();
        small.choose(&mut self.rng).cloned().unwrap_or_else(|| self.group())
    }

    pub fn element(&mut self, s: &Subgroup) -> Elem {
        s.elements()[self.rng.gen_range(0..s.order())]
    }

    /// A subgroup of `s` generated by up to two random elements.
    pub fn subgroup(&mut self, s: &Subgroup) -> Subgroup {
        let n = self.rng.gen_range(0..=2);
        let gens: Vec<Elem> = (0..n).map(|_| self.element(s)).collect();
        Subgroup::generate(s.ambient(), &gens)
    }

    /// A subgroup of `G x H` generated by up to two random pairs, each pair
    /// with probability 1/4 supported on a single factor.
    pub fn product_subgroup(&mut self, g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> ProductSubgroup {
        let amb = FiniteGroup::product(g, h);
        let n = self.rng.gen_range(0..=2);
        let pairs: Vec<(Elem, Elem)> = (0..n)
            .map(|_| {
                let a = self.rng.gen_range(0..g.order()) as Elem;
                let b = self.rng.gen_range(0..h.order()) as Elem;
                match self.rng.gen_range(0..8) {
                    0 => (a, h.identity()),
                    1 => (g.identity(), b),
                    _ => (a, b),
                }
            })
            .collect();
        ProductSubgroup::generate(&amb, &pairs)
    }

    /// As [`Sampler::product_subgroup`], redrawn until the order is at most `cap`.
    pub fn small_product_subgroup(&mut self, g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, cap: usize) -> ProductSubgroup {
        loop {
            let x = self.product_subgroup(g, h);
            if x.order() <= cap {
                return x;
            }
        }
    }

    pub fn sub_product(&mut self, x: &ProductSubgroup) -> ProductSubgroup {
        ProductSubgroup::new(self.subgroup(x.subgroup())).expect("subgroup of a product")
    }

    /// A coset set `S/T`, sometimes with a second orbit.
    pub fn gset(&mut self, s: &Subgroup) -> Result<GAction> {
        let t = self.subgroup(s);
        let a = GAction::coset_action(s, &t)?;
        if self.rng.gen_bool(0.3) {
            let t2 = self.subgroup(s);
            return Ok(a.disjoint_union(&GAction::coset_action(s, &t2)?)?.materialize());
        }
        Ok(a)
    }

    /// `Ind_C^S lambda` for a random cyclic `C = <c> <= S` and a random linear `lambda`.
    pub fn induced_linear(&mut self, s: &Subgroup) -> Result<ClassFunction> {
        let c = self.element(s);
        let cyc = Subgroup::generate(s.ambient(), &[c]);
        let j = self.rng.gen_range(0..cyc.order()) as i64;
        ClassFunction::cyclic_linear(&cyc, c, j)?.induce(s)
    }
}

fn describe_pair(x: &ProductSubgroup, y: &ProductSubgroup) -> String {
    format!(
        "X = {} in {}, Y = {} in {}",
        x.subgroup().describe(),
        x.ambient().name(),
        y.subgroup().describe(),
        y.ambient().name()
    )
}

fn point_biset(l: &Subgroup, r: &Subgroup) -> Result<BisetView> {
    BisetView::coset(l, r, &ProductSubgroup::product_of(l, r))
}

fn perturb_set(a: &GAction, mutate: bool) -> Result<GAction> {
    if mutate {
        a.disjoint_union(&GAction::trivial(a.group(), 1))
    } else {
        Ok(a.clone())
    }
}

fn perturb_biset(a: &BisetView, mutate: bool) -> Result<BisetView> {
    if mutate {
        a.disjoint_union(&point_biset(a.left(), a.right())?)
    } else {
        Ok(a.clone())
    }
}

/// Mackey formula: `tensor_mackey(X, Y)` against the orbit decomposition of
/// `(G x H)/X (x)_H (H x K)/Y`.
pub fn mackey_law(cfg: &SuiteConfig) -> Result<LawReport> {
    let mut s = Sampler::new(cfg.seed, cfg.max_order)?;
    let mut rep = LawReport::new("mackey formula");
    for _ in 0..cfg.count {
        let (g, h, k) = (s.group(), s.group(), s.group());
        let x = s.product_subgroup(&g, &h);
        let y = s.product_subgroup(&h, &k);
        let outcome = (|| {
            let direct = tensor_direct(&BisetView::from_product_subgroup(&x)?, &BisetView::from_product_subgroup(&y)?)?;
            let direct = perturb_biset(&direct, cfg.mutate)?;
            Ok(tensor_mackey(&x, &y)? == direct.decompose())
        })();
        rep.record(|| describe_pair(&x, &y), outcome);
    }
    Ok(rep)
}

/// Extended tensor products against `DefRes`, the `DefRes`-induction
/// decomposition, and the induction formula for extended tensor products.
pub fn extended_laws(cfg: &SuiteConfig) -> Result<Vec<LawReport>> {
    let mut s = Sampler::new(cfg.seed.wrapping_add(1), cfg.max_order.min(8))?;
    let mut defres = LawReport::new("extended tensor via DefRes");
    let mut defres_ind = LawReport::new("DefRes of induced bisets");
    let mut ind = LawReport::new("induction formula for extended tensor products");
    for _ in 0..cfg.count {
        let (g, h, k) = (s.group(), s.group(), s.group());
        let x = s.small_product_subgroup(&g, &h, SMALL_SUBGROUP);
        let y = s.small_product_subgroup(&h, &k, SMALL_SUBGROUP);

        let outcome = (|| {
            let u = s.gset(x.subgroup())?;
            let v = s.gset(y.subgroup())?;
            check_prop_defres(&x, &y, &u, &v)
        })();
        defres.record(|| describe_pair(&x, &y), outcome);

        let (xp, yp) = (s.sub_product(&x), s.sub_product(&y));
        defres_ind.record(
            || format!("{}, X' = {}, Y' = {}", describe_pair(&x, &y), xp.subgroup().describe(), yp.subgroup().describe()),
            check_defres_induction(&x, &xp, &y, &yp),
        );

        let (xp, yp) = (s.sub_product(&x), s.sub_product(&y));
        let outcome = (|| {
            let u = s.gset(xp.subgroup())?;
            let v = s.gset(yp.subgroup())?;
            let f = extended_induction_formula(&x, &xp, &y, &yp, &u, &v)?;
            if cfg.mutate {
                return iso_check(&f.lhs, &perturb_set(&f.rhs, true)?);
            }
            Ok(f.witness)
        })();
        ind.record(
            || format!("{}, X' = {}, Y' = {}", describe_pair(&x, &y), xp.subgroup().describe(), yp.subgroup().describe()),
            outcome,
        );
    }
    Ok(vec![defres, defres_ind, ind])
}

fn coset_biset(s: &mut Sampler, g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Result<BisetView> {
    BisetView::from_product_subgroup(&s.product_subgroup(g, h))
}

fn iso(a: &BisetView, b: &BisetView, mutate: bool) -> Result<bool> {
    a.is_isomorphic(&perturb_biset(b, mutate)?)
}

/// Distributivity, associativity, compatibility with products and unit laws
/// of the tensor product of bisets, and associativity of extended tensor
/// products; `count` instances of each.
pub fn coherence_laws(cfg: &SuiteConfig) -> Result<Vec<LawReport>> {
    let mut s = Sampler::new(cfg.seed.wrapping_add(2), cfg.max_order)?;
    let mut dist = LawReport::new("tensor distributes over disjoint unions");
    let mut assoc = LawReport::new("tensor associativity");
    let mut prod = LawReport::new("tensor commutes with products");
    let mut unit = LawReport::new("tensor unit laws");
    let mut ext = LawReport::new("extended tensor associativity");
    let m = cfg.mutate;
    for _ in 0..cfg.count {
        let (g, h, k, l) = (s.group(), s.group(), s.group(), s.group());

        let outcome = (|| {
            let (u, u2, v) = (coset_biset(&mut s, &g, &h)?, coset_biset(&mut s, &g, &h)?, coset_biset(&mut s, &h, &k)?);
            let v2 = coset_biset(&mut s, &h, &k)?;
            let left = tensor_direct(&u.disjoint_union(&u2)?, &v)?;
            let left_split = tensor_direct(&u, &v)?.disjoint_union(&tensor_direct(&u2, &v)?)?;
            let right = tensor_direct(&u, &v.disjoint_union(&v2)?)?;
            let right_split = tensor_direct(&u, &v)?.disjoint_union(&tensor_direct(&u, &v2)?)?;
            Ok(iso(&left, &left_split, m)? && iso(&right, &right_split, m)?)
        })();
        dist.record(|| format!("G = {}, H = {}, K = {}", g.name(), h.name(), k.name()), outcome);

        let outcome = (|| {
            let (u, v, w) = (coset_biset(&mut s, &g, &h)?, coset_biset(&mut s, &h, &k)?, coset_biset(&mut s, &k, &l)?);
            let a = tensor_direct(&tensor_direct(&u, &v)?, &w)?;
            let b = tensor_direct(&u, &tensor_direct(&v, &w)?)?;
            iso(&a, &b, m)
        })();
        assoc.record(|| format!("G = {}, H = {}, K = {}, L = {}", g.name(), h.name(), k.name(), l.name()), outcome);

        let small: Vec<_> = (0..6).map(|_| s.small_group(4)).collect();
        let outcome = (|| {
            let u = coset_biset(&mut s, &small[0], &small[1])?;
            let r = coset_biset(&mut s, &small[1], &small[2])?;
            let v = coset_biset(&mut s, &small[3], &small[4])?;
            let t = coset_biset(&mut s, &small[4], &small[5])?;
            let a = tensor_direct(&u, &r)?.product(&tensor_direct(&v, &t)?);
            let b = tensor_direct(&u.product(&v).materialize(), &r.product(&t).materialize())?;
            iso(&a, &b, m)
        })();
        prod.record(|| format!("groups {:?}", small.iter().map(|x| x.name().to_string()).collect::<Vec<_>>()), outcome);

        let outcome = (|| {
            let u = coset_biset(&mut s, &g, &h)?;
            let lid = crate::biset::identity_biset(&Subgroup::full(&g))?;
            let rid = crate::biset::identity_biset(&Subgroup::full(&h))?;
            Ok(iso(&tensor_direct(&lid, &u)?, &u, m)? && iso(&tensor_direct(&u, &rid)?, &u, m)?)
        })();
        unit.record(|| format!("G = {}, H = {}", g.name(), h.name()), outcome);

        let x = s.small_product_subgroup(&g, &h, SMALL_SUBGROUP);
        let y = s.small_product_subgroup(&h, &k, SMALL_SUBGROUP);
        let z = s.small_product_subgroup(&k, &l, SMALL_SUBGROUP);
        let outcome = (|| {
            let (u, v, w) = (s.gset(x.subgroup())?, s.gset(y.subgroup())?, s.gset(z.subgroup())?);
            let xy = star(&x, &y)?;
            let yz = star(&y, &z)?;
            let a = extended_tensor(&xy, &z, &extended_tensor(&x, &y, &u, &v)?, &w)?;
            let b = extended_tensor(&x, &yz, &u, &extended_tensor(&y, &z, &v, &w)?)?;
            iso_check(&a, &perturb_set(&b, m)?)
        })();
        ext.record(|| format!("{}, Z = {}", describe_pair(&x, &y), z.subgroup().describe()), outcome);
    }
    Ok(vec![dist, assoc, prod, unit, ext])
}

/// The induction formula at character level for induced linear characters
/// and for permutation characters (the latter against fixed points of the
/// biset-level construction), and the character of an extended tensor
/// product against [`contract_extended`].
pub fn character_laws(cfg: &SuiteConfig) -> Result<Vec<LawReport>> {
    let mut s = Sampler::new(cfg.seed.wrapping_add(3), cfg.max_order.min(8))?;
    let mut linear = LawReport::new("character induction formula, induced linear characters");
    let mut perm = LawReport::new("character induction formula against fixed points");
    let mut ext = LawReport::new("extended tensor character");
    let perturb = |f: ClassFunction| -> Result<ClassFunction> {
        if cfg.mutate {
            f.add(&ClassFunction::trivial(f.group()))
        } else {
            Ok(f)
        }
    };
    for _ in 0..cfg.count {
        let (g, h, k) = (s.group(), s.group(), s.group());
        let x = s.product_subgroup(&g, &h);
        let y = s.product_subgroup(&h, &k);

        let outcome = (|| {
            let (cm, cn) = (s.induced_linear(x.subgroup())?, s.induced_linear(y.subgroup())?);
            let (lhs, rhs) = bouc_formula_sides(&x, &y, &cm, &cn)?;
            Ok(lhs == perturb(rhs)?)
        })();
        linear.record(|| describe_pair(&x, &y), outcome);

        let outcome = (|| {
            let (u, v) = (s.gset(x.subgroup())?, s.gset(y.subgroup())?);
            let (lhs, rhs) = bouc_formula_sides(&x, &y, &ClassFunction::perm_character(&u), &ClassFunction::perm_character(&v))?;
            let gh = ProductSubgroup::full(&g, &h);
            let hk = ProductSubgroup::full(&h, &k);
            let induced = extended_tensor(&gh, &hk, &u.induce(gh.subgroup())?, &v.induce(hk.subgroup())?)?;
            let fixed = ClassFunction::perm_character(&induced);
            Ok(lhs == rhs && fixed == perturb(lhs)?)
        })();
        perm.record(|| describe_pair(&x, &y), outcome);

        let outcome = (|| {
            let (u, v) = (s.gset(x.subgroup())?, s.gset(y.subgroup())?);
            let fixed = ClassFunction::perm_character(&extended_tensor(&x, &y, &u, &v)?);
            let contracted = contract_extended(&x, &y, &ClassFunction::perm_character(&u), &ClassFunction::perm_character(&v))?;
            Ok(fixed == perturb(contracted)?)
        })();
        ext.record(|| describe_pair(&x, &y), outcome);
    }
    Ok(vec![linear, perm, ext])
}

/// All laws, `cfg.count` instances each.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut laws = vec![mackey_law(cfg)?];
    laws.extend(extended_laws(cfg)?);
    laws.extend(coherence_laws(cfg)?);
    laws.extend(character_laws(cfg)?);
    Ok(SuiteReport { seed: cfg.seed, max_order: cfg.max_order, laws })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(count: usize, mutate: bool) -> SuiteConfig {
        SuiteConfig { seed: 7, count, max_order: 6, mutate }
    }

    #[test]
    fn suite_passes_on_small_groups() {
        let r = run_suite(&small(6, false)).unwrap();
        for l in &r.laws {
            assert!(l.ok(), "{}: {:?}", l.law, l.counterexamples);
        }
    }

    #[test]
    fn mutation_is_detected() {
        let r = mackey_law(&small(4, true)).unwrap();
        assert_eq!(r.passed, 0);
        assert!(!r.counterexamples.is_empty());
        let c = character_laws(&small(3, true)).unwrap();
        assert!(c.iter().all(|l| l.passed == 0));
    }

    #[test]
    fn deterministic_given_seed() {
        let a = serde_json::to_string(&mackey_law(&small(5, false)).unwrap()).unwrap();
        let b = serde_json::to_string(&mackey_law(&small(5, false)).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_run_passes() {
        let r = run_suite(&small(0, false)).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances(), 0);
    }
}
