//! The acceptance checks, one function per criterion. Each returns a
//! pass/fail verdict with a short deterministic detail line; wall-clock
//! limits are enforced but never written into the detail.

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arith::factorize;
use crate::blocks::{analyze_blocks, central_character_partition, BlockOptions, CentralElement};
use crate::broue::{rickard_reduce, verify_main_theorem};
use crate::error::Result;
use crate::field::Field;
use crate::io::{bundled_names, bundled_table};
use crate::scenario::{bundled_scenario, identity_pair, run_scenario};
use crate::suite::{character_laws, coherence_laws, extended_laws, mackey_law, LawReport, SuiteConfig};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceReport {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
}

impl AcceptanceReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }
}

fn timed(id: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionResult {
    let start = Instant::now();
    let (mut passed, mut detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    if let Some(l) = limit {
        if elapsed > l {
            passed = false;
            detail = format!("{detail}; exceeded the {}s limit", l.as_secs());
        }
    }
    CriterionResult { id, name: name.into(), passed, detail, elapsed }
}

fn summarize(laws: &[LawReport], minimum: usize) -> (bool, String) {
    let ok = laws.iter().all(|l| l.ok() && l.instances >= minimum);
    let parts: Vec<String> = laws
        .iter()
        .map(|l| {
            let mut s = format!("{}: {}/{}", l.law, l.passed, l.instances);
            if let Some(c) = l.counterexamples.first() {
                s.push_str(&format!(" [first failure: {c}]"));
            }
            s
        })
        .collect();
    (ok, parts.join("; "))
}

fn cfg(seed: u64, count: usize) -> SuiteConfig {
    SuiteConfig { seed, count, max_order: 12, mutate: false }
}

pub fn criterion_1(seed: u64) -> CriterionResult {
    timed(1, "Mackey formula for tensor products of transitive bisets", Some(Duration::from_secs(60)), || {
        Ok(summarize(&[mackey_law(&cfg(seed, 200))?], 200))
    })
}

pub fn criterion_2(seed: u64) -> CriterionResult {
    timed(2, "extended tensor products: DefRes, its induction decomposition, induction formula", Some(Duration::from_secs(120)), || {
        Ok(summarize(&extended_laws(&cfg(seed, 100))?, 100))
    })
}

pub fn criterion_3(seed: u64) -> CriterionResult {
    timed(3, "coherence laws and associativity of extended tensor products", None, || {
        Ok(summarize(&coherence_laws(&cfg(seed, 100))?, 100))
    })
}

pub fn criterion_4(seed: u64) -> CriterionResult {
    timed(4, "character-level induction formula and extended tensor characters", None, || {
        Ok(summarize(&character_laws(&cfg(seed, 50))?, 50))
    })
}

fn idempotent_axioms(es: &[CentralElement]) -> Result<bool> {
    let Some(first) = es.first() else { return Ok(false) };
    let mut sum = CentralElement::zero(first.field(), first.group());
    for (i, e) in es.iter().enumerate() {
        if !e.is_idempotent() || e.is_zero() {
            return Ok(false);
        }
        for f in &es[i + 1..] {
            if !e.mul(f)?.is_zero() {
                return Ok(false);
            }
        }
        sum = sum.add(e)?;
    }
    Ok(sum == CentralElement::one(first.field(), first.group()))
}

pub fn criterion_5() -> CriterionResult {
    timed(5, "blocks of S3 at p = 2 and p = 3", None, || {
        let t = bundled_table("S3")?;
        let full = t.group().clone();
        let mut ok = true;
        let mut detail = Vec::new();
        for (p, want) in [(2u64, vec![2usize, 1]), (3, vec![3])] {
            let field = Arc::new(Field::splitting(full.ambient().exponent(), p)?);
            let blocks = analyze_blocks(&field, &full, Some(&t), BlockOptions::default())?;
            let orders: Vec<usize> = blocks.iter().map(|b| b.defect_group.order()).collect();
            let mut parts: Vec<Vec<usize>> = blocks.iter().map(|b| b.characters.clone()).collect();
            parts.sort();
            let oracle = central_character_partition(&t, &field)?;
            let idems: Vec<CentralElement> = blocks.iter().map(|b| b.idempotent.clone()).collect();
            let axioms = idempotent_axioms(&idems)?;
            let sylow_ok = blocks.iter().all(|b| b.defect_group == full.sylow(p));
            let named: Vec<String> = parts
                .iter()
                .map(|c| c.iter().map(|&i| t.name_of(i).to_string()).collect::<Vec<_>>().join(","))
                .collect();
            ok &= orders == want && parts == oracle && axioms;
            if p == 2 {
                ok &= named == ["1,sgn", "chi2"];
            } else {
                ok &= sylow_ok && named == ["1,sgn,chi2"];
            }
            detail.push(format!(
                "p={p}: {} blocks over F_{}, defect group orders {orders:?}, characters {{{}}}, central-character oracle {}, idempotent axioms {}",
                blocks.len(),
                field.size(),
                named.join(" | "),
                if parts == oracle { "agrees" } else { "disagrees" },
                if axioms { "hold" } else { "fail" }
            ));
        }
        Ok((ok, detail.join("; ")))
    })
}

pub fn criterion_6() -> CriterionResult {
    timed(6, "C6/C3 scenario", Some(Duration::from_secs(5)), || {
        let r = run_scenario(&bundled_scenario("c6_c3")?)?;
        let v = &r.verdict;
        let signs_ok = v.isometry.iter().all(|t| t.2 == 1);
        let ok = v.perfect.is_perfect()
            && signs_ok
            && v.beta_gamma == 2
            && v.defect_group_b.contains("order 3")
            && v.defect_group_c.contains("order 3")
            && (v.dim_v, v.dim_w) == (1, 1)
            && v.local.value == "2"
            && v.sign.epsilon == 1
            && v.holds;
        Ok((
            ok,
            format!(
                "perfect {}, isometry signs {:?}, beta(gamma) = {}, D = {}, E = {}, dim V = {}, dim W = {}, b(B,C) = {}, epsilon = {}, verdict {}",
                v.perfect.is_perfect(),
                v.isometry.iter().map(|t| t.2).collect::<Vec<_>>(),
                v.beta_gamma,
                v.defect_group_b,
                v.defect_group_c,
                v.dim_v,
                v.dim_w,
                v.local.value,
                v.sign.epsilon,
                if v.holds { "holds" } else { "fails" }
            ),
        ))
    })
}

pub fn criterion_7() -> CriterionResult {
    timed(7, "identity scenario, negation and shift", None, || {
        let mut ok = true;
        let mut cases = 0;
        let mut failures = Vec::new();
        for name in bundled_names() {
            let t = bundled_table(name)?;
            let order = t.group().order() as u64;
            let primes = if order == 1 { vec![2] } else { factorize(order).into_iter().map(|(p, _)| p).collect() };
            for p in primes {
                let (pair, gamma) = identity_pair(t.clone(), p, BlockOptions::default())?;
                let v = verify_main_theorem(&pair, &gamma)?;
                let neg = verify_main_theorem(&pair, &gamma.negate())?;
                let shifted = rickard_reduce(&[(1, gamma.clone())])?;
                let sh = verify_main_theorem(&pair, &shifted)?;
                let case_ok = v.beta_gamma == 1
                    && v.sign.epsilon == 1
                    && v.local.value == "1"
                    && v.holds
                    && (neg.beta_gamma + v.beta_gamma) % p == 0
                    && neg.sign.epsilon == -1
                    && neg.holds
                    && shifted == gamma.negate()
                    && sh.beta_gamma == neg.beta_gamma;
                cases += 1;
                if !case_ok {
                    ok = false;
                    failures.push(format!("{name} at p={p}"));
                }
            }
        }
        let detail = if failures.is_empty() {
            format!("{cases} (group, prime) cases: beta = 1, epsilon = +1, b(B,B) = 1, beta(-gamma) = -1, shift = negation")
        } else {
            format!("failed for {}", failures.join(", "))
        };
        Ok((ok, detail))
    })
}

pub fn criterion_8() -> CriterionResult {
    timed(8, "Brauer correspondent scenarios give beta = +-1", None, || {
        let mut ok = true;
        let mut detail = Vec::new();
        for name in ["brauer_corr_s3", "brauer_corr_a4_c3"] {
            let r = run_scenario(&bundled_scenario(name)?)?;
            let v = &r.verdict;
            let pm1 = |x: u64| x == 1 || x == v.p - 1;
            let case_ok = r.passed && r.brauer_correspondent == Some(true) && pm1(v.beta_gamma) && pm1(v.local.residue);
            ok &= case_ok;
            detail.push(format!(
                "{name}: beta(gamma) = {} mod {}, b(B,C) = {}, epsilon = {}, Brauer correspondent {}",
                v.beta_gamma,
                v.p,
                v.local.value,
                v.sign.epsilon,
                if r.brauer_correspondent == Some(true) { "confirmed" } else { "not confirmed" }
            ));
        }
        Ok((ok, detail.join("; ")))
    })
}

pub fn criterion_9() -> CriterionResult {
    timed(9, "independence of choices in the C6/C3 scenario", None, || {
        let r = run_scenario(&bundled_scenario("c6_c3")?)?;
        let Some(c) = r.choice_independence else {
            return Ok((false, "choice independence was not run".into()));
        };
        let has_field_run = c.runs.iter().any(|run| run.label.starts_with("field degree"));
        let ok = c.consistent && has_field_run && c.skipped.is_empty() && c.runs.len() >= 5;
        let labels: Vec<String> =
            c.runs.iter().map(|run| format!("{} -> b(B,C) = {}, epsilon = {}", run.label, run.local_value, run.epsilon)).collect();
        Ok((ok, format!("{} runs {}: {}", c.runs.len(), if c.consistent { "agree" } else { "disagree" }, labels.join("; "))))
    })
}

pub fn run_acceptance(seed: u64) -> AcceptanceReport {
    let criteria = vec![
        criterion_1(seed),
        criterion_2(seed),
        criterion_3(seed),
        criterion_4(seed),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ];
    AcceptanceReport { seed, criteria }
}
