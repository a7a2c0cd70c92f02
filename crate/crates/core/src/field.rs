//! Finite fields `F_q`, `q = p^m`, with log/antilog tables over the
//! lexicographically first primitive polynomial, and reduction of
//! p-integral cyclotomic numbers into `F_q`.

use std::fmt;

use crate::arith::{is_prime, mod_inverse, multiplicative_order, p_part, p_prime_part};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Elements are encoded as integers `0..q` whose base-`p` digits are the
/// coefficients of a polynomial in the primitive root `x`.
pub type FqElem = u32;

/// Largest field handled.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// Coefficients `c_0..c_{m-1}` with `x^m = -(c_0 + ... + c_{m-1} x^{m-1})`.
    modulus: Vec<u32>,
    exp: Vec<FqElem>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for Field {}

/// `(m, q)` with `m` the order of `p` modulo the `p'`-part of `exponent`.
pub fn splitting_params(exponent: u64, p: u64) -> Result<(u32, u64)> {
    if !is_prime(p) {
        return Err(Error::Field(format!("{p} is not prime")));
    }
    let n = p_prime_part(exponent, p);
    let m = if n == 1 { 1 } else { multiplicative_order(p % n, n) };
    let q = p.checked_pow(m as u32).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(Error::SizeLimit {
        what: "field size".into(),
        size: usize::MAX,
        cap: MAX_FIELD_SIZE as usize,
    })?;
    Ok((m as u32, q))
}

impl Field {
    pub fn new(p: u64, m: u32) -> Result<Field> {
        if !is_prime(p) || m == 0 {
            return Err(Error::Field(format!("no field of characteristic {p} and degree {m}")));
        }
        let q = p.checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(Error::SizeLimit {
            what: "field size".into(),
            size: usize::MAX,
            cap: MAX_FIELD_SIZE as usize,
        })?;
        let (p, q) = (p as u32, q as u32);
        for code in 0..q {
            let modulus = digits(code, p, m);
            if let Some((exp, log)) = power_tables(p, m, q, &modulus) {
                return Ok(Field { p, m, q, modulus, exp, log });
            }
        }
        Err(Error::Internal(format!("no primitive polynomial of degree {m} over F_{p}")))
    }

    /// Smallest field of characteristic `p` containing the `exponent`-th roots of unity.
    pub fn splitting(exponent: u64, p: u64) -> Result<Field> {
        let (m, _) = splitting_params(exponent, p)?;
        Field::new(p, m)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u64 {
        self.q as u64
    }

    /// Coefficients of the defining primitive polynomial, constant term first, monic.
    pub fn modulus(&self) -> Vec<u32> {
        let mut c = self.modulus.clone();
        c.push(1);
        c
    }

    pub fn zero(&self) -> FqElem {
        0
    }

    pub fn one(&self) -> FqElem {
        1
    }

    /// The class of the polynomial `x`, a generator of the multiplicative group.
    pub fn generator(&self) -> FqElem {
        self.exp[1 % (self.q as usize - 1)]
    }

    pub fn from_int(&self, k: i64) -> FqElem {
        k.rem_euclid(self.p as i64) as FqElem
    }

    /// The prime-field value, if `a` lies in `F_p`.
    pub fn to_prime_field(&self, a: FqElem) -> Option<u32> {
        (a < self.p).then_some(a)
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        0..self.q
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.m == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[s as usize]
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a == 0 {
            return Err(Error::Field("division by zero".into()));
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FqElem, k: u64) -> FqElem {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (k % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// Discrete logarithm to the base [`Field::generator`].
    pub fn log(&self, a: FqElem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `generator^k`.
    pub fn exp(&self, k: i64) -> FqElem {
        self.exp[k.rem_euclid(self.q as i64 - 1) as usize]
    }

    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, self.p as u64)
    }

    /// The root of unity of order `n` with least discrete logarithm.
    pub fn root_of_unity(&self, n: u64) -> Result<FqElem> {
        let q1 = self.q as u64 - 1;
        if n == 0 || q1 % n != 0 {
            return Err(Error::SplittingField(format!("F_{} has no primitive {n}-th root of unity", self.q)));
        }
        Ok(self.exp((q1 / n) as i64))
    }

    /// Image of `zeta_n^k` under the reduction fixed by [`Field::root_of_unity`]:
    /// `zeta_n` maps to the unique `p'`-root whose `p^a`-th power is the chosen
    /// root of order `n_{p'}`.
    pub fn reduce_root(&self, n: u64, k: i64) -> Result<FqElem> {
        let p = self.p as u64;
        let np = p_prime_part(n, p);
        let pa = p_part(n, p);
        let omega = self.root_of_unity(np)?;
        if np == 1 {
            return Ok(1);
        }
        let alpha = mod_inverse((pa % np) as i64, np as i64).unwrap();
        let e = (k.rem_euclid(n as i64) as i128 * alpha as i128).rem_euclid(np as i128) as u64;
        Ok(self.pow(omega, e))
    }

    /// Reduction of a p-integral cyclotomic number.
    pub fn reduce(&self, z: &Cyclotomic) -> Result<FqElem> {
        let p = self.p as i128;
        let mut acc = 0;
        for (k, c) in z.coeffs().iter().enumerate() {
            if *c.numer() == 0 {
                continue;
            }
            let den = c.denom().rem_euclid(p);
            if den == 0 {
                return Err(Error::Field(format!("{z} is not {p}-integral")));
            }
            let num = self.from_int(c.numer().rem_euclid(p) as i64);
            let coef = self.div(num, self.from_int(den as i64))?;
            acc = self.add(acc, self.mul(coef, self.reduce_root(z.conductor(), k as i64)?));
        }
        Ok(acc)
    }

    /// Field element as a polynomial string in the generator `a`.
    pub fn format(&self, e: FqElem) -> String {
        if self.m == 1 {
            return e.to_string();
        }
        let d = digits(e, self.p, self.m);
        let terms: Vec<String> = d
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".into(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn digits(mut code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(code % p);
        code /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Powers of `x` modulo the monic polynomial with lower coefficients `low`;
/// `None` unless `x` has multiplicative order `q - 1`.
fn power_tables(p: u32, m: u32, q: u32, low: &[u32]) -> Option<(Vec<FqElem>, Vec<u32>)> {
    if m > 1 && low[0] == 0 {
        return None;
    }
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut log = vec![u32::MAX; q as usize];
    let mut cur = vec![0u32; m as usize];
    cur[0] = 1;
    for k in 0..(q - 1) {
        let code = undigits(&cur, p);
        if log[code as usize] != u32::MAX {
            return None;
        }
        log[code as usize] = k;
        exp.push(code);
        // multiply by x
        if m == 1 {
            cur[0] = (cur[0] * (p - low[0] % p) % p) % p;
        } else {
            let top = cur[m as usize - 1];
            for i in (1..m as usize).rev() {
                cur[i] = (cur[i - 1] + (p - top * low[i] % p)) % p;
            }
            cur[0] = (p - top * low[0] % p) % p;
        }
    }
    (cur == digits(1, p, m)).then_some((exp, log))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_params(2, 3).unwrap(), (1, 3));
        assert_eq!(splitting_params(3, 2).unwrap(), (2, 4));
        assert_eq!(splitting_params(1, 5).unwrap(), (1, 5));
        assert_eq!(splitting_params(6, 3).unwrap(), (1, 3));
        assert_eq!(splitting_params(12, 5).unwrap(), (2, 25));
        assert!(splitting_params(6, 4).is_err());
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, m) in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (5, 2), (7, 1)] {
            let f = Field::new(p, m).unwrap();
            let q = f.size() as u32;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, q - 1] {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                    assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn f4_generator_satisfies_modulus() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), vec![1, 1, 1]);
        let a = f.generator();
        assert_eq!(f.add(f.add(f.mul(a, a), a), 1), 0);
    }

    #[test]
    fn reduction_is_multiplicative() {
        let f = Field::new(2, 2).unwrap();
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        let rw = f.reduce(&w).unwrap();
        assert_eq!(rw, f.root_of_unity(3).unwrap());
        assert_eq!(f.reduce(&(&w * &w)).unwrap(), f.reduce(&w2).unwrap());
        // 1 + w + w^2 = 0
        assert_eq!(f.add(f.add(1, rw), f.mul(rw, rw)), 0);
        // zeta_6 = -zeta_3^2, and in characteristic 2 both reduce to the same cube root
        let z6 = Cyclotomic::root_of_unity(6, 1);
        assert_eq!(f.reduce(&z6).unwrap(), f.reduce(&w2).unwrap());
        assert_eq!(f.reduce(&z6.pow(2)).unwrap(), f.mul(f.reduce(&z6).unwrap(), f.reduce(&z6).unwrap()));
        let half = Cyclotomic::rational(crate::cyclotomic::Rational::new(1, 2));
        assert!(f.reduce(&half).is_err());
    }
}
