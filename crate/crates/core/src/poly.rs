//! Univariate polynomials over `F_q` and Cantor–Zassenhaus factorization.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FqElem};

/// Coefficients, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqPoly(Vec<FqElem>);

impl FqPoly {
    pub fn new(mut c: Vec<FqElem>) -> FqPoly {
        while c.last() == Some(&0) {
            c.pop();
        }
        FqPoly(c)
    }

    pub fn zero() -> FqPoly {
        FqPoly(vec![])
    }

    pub fn constant(c: FqElem) -> FqPoly {
        FqPoly::new(vec![c])
    }

    pub fn x() -> FqPoly {
        FqPoly(vec![0, 1])
    }

    /// `x - r`.
    pub fn linear(f: &Field, r: FqElem) -> FqPoly {
        FqPoly(vec![f.neg(r), 1])
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lead(&self) -> FqElem {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, f: &Field, o: &FqPoly) -> FqPoly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| f.add(*self.0.get(i).unwrap_or(&0), *o.0.get(i).unwrap_or(&0)))
            .collect();
        FqPoly::new(c)
    }

    pub fn sub(&self, f: &Field, o: &FqPoly) -> FqPoly {
        self.add(f, &o.scale(f, f.neg(1)))
    }

    pub fn scale(&self, f: &Field, s: FqElem) -> FqPoly {
        FqPoly::new(self.0.iter().map(|&a| f.mul(a, s)).collect())
    }

    pub fn mul(&self, f: &Field, o: &FqPoly) -> FqPoly {
        if self.is_zero() || o.is_zero() {
            return FqPoly::zero();
        }
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        FqPoly::new(c)
    }

    pub fn divrem(&self, f: &Field, d: &FqPoly) -> Result<(FqPoly, FqPoly)> {
        if d.is_zero() {
            return Err(Error::Field("polynomial division by zero".into()));
        }
        let inv = f.inv(d.lead())?;
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        if r.len() <= dd {
            return Ok((FqPoly::zero(), self.clone()));
        }
        let mut qc = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            qc[i - dd] = c;
            for (j, &b) in d.0.iter().enumerate() {
                let k = i - dd + j;
                r[k] = f.sub(r[k], f.mul(c, b));
            }
        }
        Ok((FqPoly::new(qc), FqPoly::new(r)))
    }

    pub fn rem(&self, f: &Field, d: &FqPoly) -> Result<FqPoly> {
        Ok(self.divrem(f, d)?.1)
    }

    pub fn monic(&self, f: &Field) -> FqPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(f, f.inv(self.lead()).unwrap())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, f: &Field, o: &FqPoly) -> FqPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b).unwrap();
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &Field) -> FqPoly {
        FqPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| f.mul(f.from_int(i as i64), a))
                .collect(),
        )
    }

    pub fn eval(&self, f: &Field, x: FqElem) -> FqElem {
        self.0.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, f: &Field, mut e: u128, m: &FqPoly) -> Result<FqPoly> {
        let mut base = self.rem(f, m)?;
        let mut acc = FqPoly::constant(1).rem(f, m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m)?;
            }
            base = base.mul(f, &base).rem(f, m)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

fn field_power(f: &Field, d: usize) -> Result<u128> {
    (f.size() as u128)
        .checked_pow(d as u32)
        .filter(|v| *v < (1u128 << 120))
        .ok_or_else(|| Error::Field("extension too large for factorization".into()))
}

/// Square-free factorization: pairs `(g, e)` with `f = lead * prod g^e`, each `g` monic square-free.
pub fn squarefree_factorization(f: &Field, poly: &FqPoly) -> Vec<(FqPoly, usize)> {
    let mut out = Vec::new();
    if poly.degree() < 1 {
        return out;
    }
    let poly = poly.monic(f);
    let d = poly.derivative(f);
    if d.is_zero() {
        for (g, e) in squarefree_factorization(f, &pth_root(f, &poly)) {
            out.push((g, e * f.characteristic() as usize));
        }
        return out;
    }
    let mut c = poly.gcd(f, &d);
    let mut w = poly.divrem(f, &c).unwrap().0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(f, &c);
        let fac = w.divrem(f, &y).unwrap().0;
        if fac.degree() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.divrem(f, &w).unwrap().0;
        i += 1;
    }
    if c.degree() > 0 {
        for (g, e) in squarefree_factorization(f, &pth_root(f, &c)) {
            out.push((g, e * f.characteristic() as usize));
        }
    }
    out
}

fn pth_root(f: &Field, poly: &FqPoly) -> FqPoly {
    let p = f.characteristic() as usize;
    let root_exp = f.size() / f.characteristic();
    FqPoly::new(poly.0.iter().step_by(p).map(|&a| f.pow(a, root_exp)).collect())
}

/// Distinct-degree factorization of a monic square-free polynomial:
/// pairs `(g, d)` where `g` is the product of the irreducible factors of degree `d`.
pub fn distinct_degree(f: &Field, poly: &FqPoly) -> Result<Vec<(FqPoly, usize)>> {
    let mut out = Vec::new();
    let mut rest = poly.monic(f);
    let x = FqPoly::x();
    let mut h = x.rem(f, &rest)?;
    let mut d = 1;
    while rest.degree() >= 2 * d as isize {
        h = h.powmod(f, f.size() as u128, &rest)?;
        let g = rest.gcd(f, &h.sub(f, &x));
        if !g.is_one() {
            rest = rest.divrem(f, &g)?.0;
            h = h.rem(f, &rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree() > 0 {
        let deg = rest.degree() as usize;
        out.push((rest, deg));
    }
    Ok(out)
}

/// Equal-degree splitting of a product of distinct monic irreducibles of degree `d`.
pub fn equal_degree(f: &Field, poly: &FqPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<FqPoly>> {
    let n = poly.degree() as usize;
    if n == d {
        return Ok(vec![poly.monic(f)]);
    }
    if n % d != 0 {
        return Err(Error::Field("equal-degree input has wrong degree".into()));
    }
    let qd = field_power(f, d)?;
    loop {
        let a = FqPoly::new((0..n).map(|_| rng.gen_range(0..f.size() as u32)).collect());
        if a.degree() < 1 {
            continue;
        }
        let g = poly.gcd(f, &a);
        let candidate = if !g.is_one() {
            g
        } else if f.characteristic() == 2 {
            // absolute trace to F_2 of the algebra F_q[x]/(g)
            let mut t = a.clone();
            let mut s = a.rem(f, poly)?;
            for _ in 1..(f.degree() as usize * d) {
                s = s.mul(f, &s).rem(f, poly)?;
                t = t.add(f, &s);
            }
            poly.gcd(f, &t)
        } else {
            let b = a.powmod(f, (qd - 1) / 2, poly)?;
            poly.gcd(f, &b.sub(f, &FqPoly::constant(1)))
        };
        if candidate.degree() > 0 && candidate.degree() < n as isize {
            let other = poly.divrem(f, &candidate)?.0;
            let mut out = equal_degree(f, &candidate, d, rng)?;
            out.extend(equal_degree(f, &other.monic(f), d, rng)?);
            return Ok(out);
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities, sorted.
pub fn factor(f: &Field, poly: &FqPoly, rng: &mut ChaCha8Rng) -> Result<Vec<(FqPoly, usize)>> {
    let mut out = Vec::new();
    for (sf, e) in squarefree_factorization(f, poly) {
        for (g, d) in distinct_degree(f, &sf)? {
            for irr in equal_degree(f, &g, d, rng)? {
                out.push((irr, e));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Roots in `F_q`, sorted, without multiplicity.
pub fn roots(f: &Field, poly: &FqPoly, rng: &mut ChaCha8Rng) -> Result<Vec<FqElem>> {
    let mut r: Vec<FqElem> = factor(f, poly, rng)?
        .into_iter()
        .filter(|(g, _)| g.degree() == 1)
        .map(|(g, _)| f.neg(g.coeffs()[0]))
        .collect();
    r.sort();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn product(f: &Field, fs: &[(FqPoly, usize)]) -> FqPoly {
        let mut acc = FqPoly::constant(1);
        for (g, e) in fs {
            for _ in 0..*e {
                acc = acc.mul(f, g);
            }
        }
        acc
    }

    #[test]
    fn x_to_q_minus_x_splits_completely() {
        for (p, m) in [(2, 2), (3, 1), (3, 2), (2, 3)] {
            let f = Field::new(p, m).unwrap();
            let mut c = vec![0; f.size() as usize + 1];
            c[1] = f.neg(1);
            c[f.size() as usize] = 1;
            let poly = FqPoly::new(c);
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let r = roots(&f, &poly, &mut rng).unwrap();
            assert_eq!(r, f.elements().collect::<Vec<_>>());
        }
    }

    #[test]
    fn irreducible_quadratic_over_f3() {
        let f = Field::new(3, 1).unwrap();
        let poly = FqPoly::new(vec![1, 0, 1]); // x^2 + 1
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(factor(&f, &poly, &mut rng).unwrap(), vec![(poly.clone(), 1)]);
        assert!(roots(&f, &poly, &mut rng).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn factorization_multiplies_back(seed in 0u64..1000, coeffs in proptest::collection::vec(0u32..9, 2..9)) {
            let f = Field::new(3, 2).unwrap();
            let mut c = coeffs;
            *c.last_mut().unwrap() = 1;
            let poly = FqPoly::new(c);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let fs = factor(&f, &poly, &mut rng).unwrap();
            prop_assert_eq!(product(&f, &fs), poly);
            let mut frng = ChaCha8Rng::seed_from_u64(seed + 1);
            for (g, _) in &fs {
                prop_assert_eq!(factor(&f, g, &mut frng).unwrap().len(), 1);
            }
        }

        #[test]
        fn char_two_factorization(seed in 0u64..1000, coeffs in proptest::collection::vec(0u32..8, 2..9)) {
            let f = Field::new(2, 3).unwrap();
            let mut c = coeffs;
            *c.last_mut().unwrap() = 1;
            let poly = FqPoly::new(c);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let fs = factor(&f, &poly, &mut rng).unwrap();
            prop_assert_eq!(product(&f, &fs), poly);
        }
    }
}
