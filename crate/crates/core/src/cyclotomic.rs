//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! An element is a rational vector in the power basis `1, z, .., z^(phi(n)-1)`
//! reduced modulo the `n`-th cyclotomic polynomial. Binary operations lift
//! both operands to the lcm of their conductors.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, gcd, lcm};
use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

static CYCLOTOMIC_POLYS: LazyLock<Mutex<HashMap<u64, Arc<Vec<i128>>>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i128>> {
    if let Some(p) = CYCLOTOMIC_POLYS.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    CYCLOTOMIC_POLYS.lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i128; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / den[dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// An element of `Q(zeta_n)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u64,
    c: Vec<Rational>,
}

fn reduce_mod_phi(n: u64, mut v: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    for i in (d..v.len()).rev() {
        let c = v[i];
        if c != Rational::from_integer(0) {
            for (j, &pj) in phi.iter().enumerate() {
                v[i - d + j] -= c * Rational::from_integer(pj);
            }
        }
    }
    v.truncate(d);
    v.resize(d, Rational::from_integer(0));
    v
}

impl Cyclotomic {
    /// `sum_k coeffs[k] zeta_n^k` (any number of coefficients).
    pub fn from_powers(n: u64, coeffs: &[Rational]) -> Cyclotomic {
        assert!(n >= 1, "conductor must be positive");
        let mut v = vec![Rational::from_integer(0); n as usize];
        for (k, &c) in coeffs.iter().enumerate() {
            v[k % n as usize] += c;
        }
        Cyclotomic { n, c: reduce_mod_phi(n, v) }
    }

    pub fn from_int_powers(n: u64, coeffs: &[i64]) -> Cyclotomic {
        let q: Vec<Rational> = coeffs.iter().map(|&c| Rational::from_integer(c as i128)).collect();
        Self::from_powers(n, &q)
    }

    pub fn rational(q: Rational) -> Cyclotomic {
        Cyclotomic { n: 1, c: vec![q] }
    }

    pub fn int(k: i64) -> Cyclotomic {
        Self::rational(Rational::from_integer(k as i128))
    }

    pub fn zero() -> Cyclotomic {
        Self::int(0)
    }

    pub fn one() -> Cyclotomic {
        Self::int(1)
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Cyclotomic {
        let mut v = vec![Rational::from_integer(0); n as usize];
        v[k.rem_euclid(n as i64) as usize] = Rational::from_integer(1);
        Cyclotomic { n, c: reduce_mod_phi(n, v) }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Coefficients in the reduced power basis of the current conductor.
    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    /// The same element written over `Q(zeta_m)`, `n | m`.
    pub fn lift(&self, m: u64) -> Cyclotomic {
        assert!(m % self.n == 0, "conductor {} does not divide {m}", self.n);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut v = vec![Rational::from_integer(0); m as usize];
        for (i, &c) in self.c.iter().enumerate() {
            v[i * step] = c;
        }
        Cyclotomic { n: m, c: reduce_mod_phi(m, v) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|c| *c == Rational::from_integer(0))
    }

    /// The rational value, if the element is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(|c| *c == Rational::from_integer(0)) {
            Some(self.c[0])
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Whether the element is an algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|c| c.is_integer())
    }

    /// Whether no coefficient denominator is divisible by `p`, i.e. the
    /// element lies in `Z_(p)[zeta_n]`.
    pub fn is_p_integral(&self, p: u64) -> bool {
        self.c.iter().all(|c| c.denom() % p as i128 != 0)
    }

    /// Lowest common denominator of the coefficients.
    pub fn denominator(&self) -> i128 {
        self.c.iter().fold(1i128, |acc, c| acc.lcm(c.denom()))
    }

    /// The Galois automorphism `zeta_n -> zeta_n^a`, `gcd(a, n) = 1`.
    pub fn galois(&self, a: i64) -> Cyclotomic {
        let n = self.n as i64;
        debug_assert_eq!(gcd(a.rem_euclid(n.max(1)) as u64, self.n), 1);
        let mut v = vec![Rational::from_integer(0); self.n as usize];
        for (i, &c) in self.c.iter().enumerate() {
            v[(i as i64 * a).rem_euclid(n) as usize] += c;
        }
        Cyclotomic { n: self.n, c: reduce_mod_phi(self.n, v) }
    }

    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    pub fn scale(&self, q: Rational) -> Cyclotomic {
        Cyclotomic { n: self.n, c: self.c.iter().map(|&c| c * q).collect() }
    }

    /// Sum of all Galois conjugates (a rational number).
    pub fn trace(&self) -> Rational {
        let n = self.n;
        let mut t = Cyclotomic::zero().lift(n);
        for a in 1..=n.max(1) {
            if gcd(a, n) == 1 {
                t = &t + &self.galois(a as i64);
            }
        }
        t.to_rational().expect("trace is rational")
    }

    /// Whether the element lies in `Q(zeta_d)`, tested by invariance under
    /// the automorphisms fixing `zeta_d`.
    fn lies_in(&self, d: u64) -> bool {
        let n = self.n;
        (1..n).filter(|&a| gcd(a, n) == 1 && a % d == 1 % d).all(|a| self.galois(a as i64) == *self)
    }

    /// Rewrites the element over the smallest conductor that contains it.
    pub fn canonical(&self) -> Cyclotomic {
        if self.to_rational().is_some() {
            return Cyclotomic { n: 1, c: vec![self.c[0]] };
        }
        let n = self.n;
        for d in 1..n {
            if n % d != 0 || !self.lies_in(d) {
                continue;
            }
            if let Some(x) = self.express_over(d) {
                return x;
            }
        }
        self.clone()
    }

    /// Solves for coordinates over `Q(zeta_d)`, `d | n`.
    fn express_over(&self, d: u64) -> Option<Cyclotomic> {
        let k = euler_phi(d) as usize;
        let rows = self.c.len();
        // columns: zeta_d^j lifted to conductor n, j < k; augmented with self
        let cols: Vec<Vec<Rational>> = (0..k).map(|j| Cyclotomic::root_of_unity(d, j as i64).lift(self.n).c).collect();
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|col| col[r]).collect();
                row.push(self.c[r]);
                row
            })
            .collect();
        let sol = crate::linalg::solve_rational(&mut m, k)?;
        Some(Cyclotomic::from_powers(d, &sol))
    }

    pub fn pow(&self, k: u32) -> Cyclotomic {
        let mut acc = Cyclotomic::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic, u64) {
    let m = lcm(a.n, b.n);
    (a.lift(m), b.lift(m), m)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b, _) = common(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n == rhs.n {
            return Cyclotomic { n: self.n, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect() };
        }
        let (a, b, m) = common(self, rhs);
        Cyclotomic { n: m, c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect() }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.n == rhs.n {
            for (a, b) in self.c.iter_mut().zip(&rhs.c) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, c: self.c.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n == 1 {
            return rhs.scale(self.c[0]);
        }
        if rhs.n == 1 {
            return self.scale(rhs.c[0]);
        }
        let (a, b, m) = common(self, rhs);
        let zero = Rational::from_integer(0);
        let mut v = vec![zero; a.c.len() + b.c.len()];
        for (i, x) in a.c.iter().enumerate() {
            if *x == zero {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        Cyclotomic { n: m, c: reduce_mod_phi(m, v) }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.canonical();
        let mut terms = Vec::new();
        for (k, c) in x.c.iter().enumerate() {
            if *c == Rational::from_integer(0) {
                continue;
            }
            let coef = fmt_rational(c);
            terms.push(match k {
                0 => coef,
                _ => {
                    let z = if k == 1 { format!("z{}", x.n) } else { format!("z{}^{k}", x.n) };
                    match coef.as_str() {
                        "1" => z,
                        "-1" => format!("-{z}"),
                        _ => format!("{coef}*{z}"),
                    }
                }
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Coefficient in a JSON document: an integer or a `"p/q"` string.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl CoeffRepr {
    fn to_rational(&self) -> Result<Rational> {
        match self {
            CoeffRepr::Int(k) => Ok(Rational::from_integer(*k as i128)),
            CoeffRepr::Text(s) => {
                let bad = || Error::Schema(format!("bad rational coefficient {s:?}"));
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim().parse::<i128>().map_err(|_| bad())?, b.trim().parse::<i128>().map_err(|_| bad())?),
                    None => (s.trim().parse::<i128>().map_err(|_| bad())?, 1),
                };
                if den == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(num, den))
            }
        }
    }

    fn from_rational(q: &Rational) -> CoeffRepr {
        if q.is_integer() && i64::try_from(q.to_integer()).is_ok() {
            CoeffRepr::Int(q.to_integer() as i64)
        } else {
            CoeffRepr::Text(fmt_rational(q))
        }
    }
}

/// JSON form of a cyclotomic number: a bare integer, or
/// `{"conductor": n, "coeffs": [c0, c1, ..]}` meaning `sum c_k zeta_n^k`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CyclotomicRepr {
    Int(i64),
    Powers { conductor: u64, coeffs: Vec<CoeffRepr> },
}

impl CyclotomicRepr {
    pub fn to_cyclotomic(&self) -> Result<Cyclotomic> {
        match self {
            CyclotomicRepr::Int(k) => Ok(Cyclotomic::int(*k)),
            CyclotomicRepr::Powers { conductor, coeffs } => {
                if *conductor == 0 {
                    return Err(Error::Schema("conductor must be positive".into()));
                }
                let q = coeffs.iter().map(CoeffRepr::to_rational).collect::<Result<Vec<_>>>()?;
                Ok(Cyclotomic::from_powers(*conductor, &q))
            }
        }
    }

    /// Canonical encoding: minimal conductor, reduced coefficients, plain
    /// integer when the value is an integer.
    pub fn from_cyclotomic(x: &Cyclotomic) -> CyclotomicRepr {
        let x = x.canonical();
        if let Some(k) = x.to_integer().and_then(|k| i64::try_from(k).ok()) {
            return CyclotomicRepr::Int(k);
        }
        CyclotomicRepr::Powers { conductor: x.n, coeffs: x.c.iter().map(CoeffRepr::from_rational).collect() }
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr::from_cyclotomic(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        CyclotomicRepr::deserialize(d)?.to_cyclotomic().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..13u64 {
            let mut s = Cyclotomic::zero();
            for k in 0..n as i64 {
                s = &s + &Cyclotomic::root_of_unity(n, k);
            }
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn lifting_and_equality() {
        let w = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(w.lift(6), Cyclotomic::root_of_unity(6, 2));
        assert_eq!(w, Cyclotomic::root_of_unity(12, 4));
        // zeta_6 = -zeta_3^2
        assert_eq!(Cyclotomic::root_of_unity(6, 1), -Cyclotomic::root_of_unity(3, 2));
        assert_eq!(w.pow(3), Cyclotomic::one());
    }

    #[test]
    fn conjugation_and_norm() {
        let w = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(&w * &w.conj(), Cyclotomic::one());
        assert_eq!(w.conj(), Cyclotomic::root_of_unity(3, 2));
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::int(-1));
        assert_eq!((&w + &w.conj()).to_rational(), Some(q(-1, 1)));
        assert_eq!(w.trace(), q(-1, 1));
    }

    #[test]
    fn canonical_conductor() {
        let x = Cyclotomic::root_of_unity(3, 1).lift(12);
        assert_eq!(x.canonical().conductor(), 3);
        let s = &Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, 7);
        // sqrt(2) lives in Q(zeta_8) but in no smaller cyclotomic field
        assert_eq!(s.canonical().conductor(), 8);
        assert_eq!((&s * &s).to_rational(), Some(q(2, 1)));
        let i = Cyclotomic::root_of_unity(12, 3);
        assert_eq!(i.canonical().conductor(), 4);
    }

    #[test]
    fn integrality() {
        let w = Cyclotomic::root_of_unity(3, 1);
        assert!(w.is_integral());
        let h = w.scale(q(1, 2));
        assert!(!h.is_integral());
        assert!(h.is_p_integral(3));
        assert!(!h.is_p_integral(2));
    }

    #[test]
    fn json_round_trip() {
        let x = Cyclotomic::from_powers(3, &[q(1, 1), q(-1, 2)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"conductor":3,"coeffs":[1,"-1/2"]}"#);
        let y: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        let z: Cyclotomic = serde_json::from_str("5").unwrap();
        assert_eq!(z, Cyclotomic::int(5));
        assert_eq!(serde_json::to_string(&z).unwrap(), "5");
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::root_of_unity(3, 1).to_string(), "z3");
        assert_eq!(Cyclotomic::int(-2).to_string(), "-2");
        assert_eq!((Cyclotomic::int(1) - Cyclotomic::root_of_unity(3, 1)).to_string(), "1 - z3");
    }
}
