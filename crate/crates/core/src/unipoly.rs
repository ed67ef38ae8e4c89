//! Dense univariate polynomials over a [`Field`].
//!
//! Everything here sticks to Euclid and p-th roots: no irreducible
//! factorization is ever needed to split a non-separable polynomial into
//! coprime parts, which is what the étale decomposition relies on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{format_sum, Field, Scalar};
use crate::finalg::{AlgebraElement, FiniteAlgebra};

/// Coefficients indexed by degree with trailing zeros trimmed; the zero
/// polynomial has no coefficients and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| field.contains(c)));
        let mut p = UniPoly { field, coeffs };
        p.trim();
        p
    }

    /// Ascending integer coefficients, e.g. `[-1, 0, 1]` is `T^2 - 1`.
    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    /// `c * T^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    /// `T - c`.
    pub fn linear_root(c: &Scalar) -> Self {
        Self::new(c.field(), vec![-c, c.field().one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.field), |acc, _| &acc * self)
    }

    /// Quotient and remainder. Panics when `d` is zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = d.coeffs[dd].inv().expect("leading coefficient is nonzero");
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(self.field), self.clone());
        };
        let mut q = vec![self.field.zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
        }
        (Self::new(self.field, q), Self::new(self.field, r))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| &self.field.from_i64(k as i64) * c)
            .collect();
        Self::new(self.field, coeffs)
    }

    /// Monic `d = gcd(f, g)` with Bézout cofactors `d = u*f + v*g`.
    pub fn extended_gcd(f: &UniPoly, g: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        if f.field != g.field {
            return Err(Error::FieldMismatch);
        }
        if f.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let k = f.field;
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (Self::one(k), Self::zero(k));
        let (mut t0, mut t1) = (Self::zero(k), Self::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = r0.leading_coeff().expect("gcd is nonzero").inv()?;
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(f: &UniPoly, g: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// `Res(f, g) = lc(f)^deg g * prod g(roots of f)`, computed by the
    /// Euclidean remainder sequence.
    pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Scalar> {
        if f.field != g.field {
            return Err(Error::FieldMismatch);
        }
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroOperand);
        }
        let k = f.field;
        let (mut a, mut b) = (f.clone(), g.clone());
        let mut acc = k.one();
        loop {
            let m = a.degree().expect("nonzero");
            let n = b.degree().expect("nonzero");
            if n == 0 {
                return Ok(&acc * &b.coeffs[0].pow(m as u64));
            }
            if m == 0 {
                return Ok(&acc * &a.coeffs[0].pow(n as u64));
            }
            // Res(a, b) = (-1)^{mn} Res(b, a) = (-1)^{mn} lc(b)^{m - k} Res(b, a mod b)
            let r = a.rem(&b);
            let Some(kdeg) = r.degree() else {
                return Ok(k.zero());
            };
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            acc = &acc * &b.coeffs[n].pow((m - kdeg) as u64);
            a = b;
            b = r;
        }
    }

    /// `disc(f) = (-1)^{m(m-1)/2} Res(f, f') / lc(f)`, with `f'` taken at its
    /// formal degree `m - 1`.
    pub fn discriminant(&self) -> Result<Scalar> {
        let m = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(m) => m,
        };
        let lc = self.coeffs[m].clone();
        let d = self.derivative();
        let Some(dd) = d.degree() else {
            return Ok(self.field.zero());
        };
        // Res_{m, m-1} = lc^{(m-1) - deg f'} * Res_{m, deg f'}
        let mut res = Self::resultant(self, &d)?;
        res = &res * &lc.pow((m - 1 - dd) as u64);
        if (m * (m - 1) / 2) % 2 == 1 {
            res = -res;
        }
        Ok(&res * &lc.inv()?)
    }

    fn check_monic_nonconstant(&self) -> Result<()> {
        match self.degree() {
            None | Some(0) => Err(Error::ConstantPolynomial),
            _ if !self.is_monic() => Err(Error::NotMonic),
            _ => Ok(()),
        }
    }

    /// `gcd(f, f') = 1`.
    pub fn is_separable(&self) -> Result<bool> {
        self.check_monic_nonconstant()?;
        Ok(Self::gcd(self, &self.derivative()).is_one())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        self.check_monic_nonconstant()?;
        Ok(self.squarefree_decomposition()?.iter().all(|(_, e)| *e == 1))
    }

    /// Pairwise coprime squarefree monic factors with multiplicities whose
    /// product is the (monic) input. Handles `f' = 0` in characteristic `p`
    /// through [`UniPoly::pth_power_decompose`].
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ConstantPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let p = self.field.characteristic() as usize;
        let d = f.derivative();
        if d.is_zero() {
            let root = f.pth_power_decompose()?;
            for (h, e) in root.squarefree_decomposition()? {
                out.push((h, e * p));
            }
            return Ok(out);
        }
        let mut c = Self::gcd(&f, &d);
        let mut w = f.exact_div(&c);
        let mut i = 1;
        while w.degree() != Some(0) {
            let y = Self::gcd(&w, &c);
            let z = w.exact_div(&y);
            if z.degree() != Some(0) {
                out.push((z, i));
            }
            i += 1;
            c = c.exact_div(&y);
            w = y;
        }
        if c.degree() != Some(0) {
            // only factors with multiplicity divisible by p remain
            let root = c.pth_power_decompose()?;
            for (h, e) in root.squarefree_decomposition()? {
                out.push((h, e * p));
            }
        }
        Ok(out)
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        Ok(self
            .squarefree_decomposition()?
            .into_iter()
            .fold(Self::one(self.field), |acc, (h, _)| &acc * &h))
    }

    /// Splits a non-separable `f` as `f1 * f2` with `gcd(f1, f2) = 1`,
    /// `gcd(f1, f') = 1` and both degrees below `deg f`.
    pub fn coprime_split(&self) -> Result<(UniPoly, UniPoly)> {
        self.check_monic_nonconstant()?;
        let d = self.derivative();
        if d.is_zero() {
            return Err(Error::ZeroDerivative);
        }
        let g = Self::gcd(self, &d);
        if g.is_one() {
            return Err(Error::AlreadySeparable);
        }
        let mut f1 = self.exact_div(&g);
        let mut f2 = g;
        loop {
            let h = Self::gcd(&f1, &f2);
            if h.is_one() {
                break;
            }
            f1 = f1.exact_div(&h);
            f2 = &f2 * &h;
        }
        if f1.degree() == Some(0) {
            return Err(Error::NoSimpleFactor);
        }
        Ok((f1, f2))
    }

    /// For `f' = 0` in characteristic `p`, the `g1` with `g1^p = f`.
    pub fn pth_power_decompose(&self) -> Result<UniPoly> {
        let p = self.field.characteristic() as usize;
        if p == 0 {
            return Err(Error::CharacteristicZero);
        }
        if !self.derivative().is_zero() {
            return Err(Error::DerivativeNonzero);
        }
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .map(Scalar::pth_root)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.field, coeffs))
    }

    /// Horner evaluation of `self` at `a` inside `alg`.
    pub fn eval_in_algebra(&self, a: &AlgebraElement, alg: &FiniteAlgebra) -> Result<AlgebraElement> {
        if self.field != alg.field() {
            return Err(Error::FieldMismatch);
        }
        alg.check_element(a)?;
        let mut acc = alg.zero();
        for c in self.coeffs.iter().rev() {
            acc = alg.mul(&acc, a)?;
            acc = alg.add(&acc, &alg.scalar(c));
        }
        Ok(acc)
    }

    pub fn display_in(&self, var: &str) -> String {
        let terms: Vec<(Scalar, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                (c.clone(), mono)
            })
            .collect();
        format_sum(&terms)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("T"))
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            self.field,
            (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect(),
        )
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.field, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn poly(k: Field, c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(k, c)
    }

    /// Independent oracle: determinant of the Sylvester matrix of `f` and `g`
    /// at their actual degrees.
    fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> Scalar {
        let k = f.field();
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        if m + n == 0 {
            return k.one();
        }
        let size = m + n;
        let mut s = Matrix::zeros(k, size, size);
        for row in 0..n {
            for j in 0..=m {
                s[(row, row + j)] = f.coeff(m - j);
            }
        }
        for row in 0..m {
            for j in 0..=n {
                s[(n + row, row + j)] = g.coeff(n - j);
            }
        }
        s.determinant()
    }

    #[test]
    fn gcd_examples() {
        let (d, u, v) = UniPoly::extended_gcd(&poly(q(), &[-1, 0, 1]), &poly(q(), &[0, 2])).unwrap();
        assert!(d.is_one());
        assert!((&(&u * &poly(q(), &[-1, 0, 1])) + &(&v * &poly(q(), &[0, 2]))).is_one());
        let (d, _, _) = UniPoly::extended_gcd(&poly(q(), &[0, -1, 1]), &poly(q(), &[0, 1])).unwrap();
        assert_eq!(d, poly(q(), &[0, 1]));
        let (d, _, _) =
            UniPoly::extended_gcd(&poly(q(), &[0, 0, -1, 1]), &poly(q(), &[0, -2, 3])).unwrap();
        assert_eq!(d, poly(q(), &[0, 1]));
        assert_eq!(
            UniPoly::extended_gcd(&UniPoly::zero(q()), &UniPoly::zero(q())),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(poly(q(), &[0, 2, 0, 1]).derivative(), poly(q(), &[2, 0, 3]));
        assert!(poly(gf(2), &[1, 0, 1]).derivative().is_zero());
        assert!(poly(q(), &[5]).derivative().is_zero());
    }

    #[test]
    fn resultant_examples() {
        let f = poly(q(), &[-1, 0, 1]);
        let g = poly(q(), &[0, 2]);
        assert_eq!(sylvester_resultant(&f, &g), q().from_i64(-4));
        assert_eq!(UniPoly::resultant(&f, &g).unwrap(), q().from_i64(-4));
        let a = poly(q(), &[-2, 1]);
        let b = poly(q(), &[-5, 1]);
        assert_eq!(sylvester_resultant(&a, &b), q().from_i64(-3));
        assert_eq!(UniPoly::resultant(&a, &b).unwrap(), q().from_i64(-3));
        assert_eq!(
            UniPoly::resultant(&poly(q(), &[1, 0, 0, 1]), &UniPoly::one(q())).unwrap(),
            q().one()
        );
        assert_eq!(
            UniPoly::resultant(&f, &UniPoly::zero(q())),
            Err(Error::ZeroOperand)
        );
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(poly(q(), &[-1, 0, 1]).discriminant().unwrap(), q().from_i64(4));
        assert!(poly(q(), &[0, 0, 1]).discriminant().unwrap().is_zero());
        let f = poly(gf(2), &[1, 1, 1]);
        assert_eq!(f.discriminant().unwrap(), gf(2).one());
        // Sylvester oracle over GF(2): Res(f, f') with f' = 1 is 1, sign and lc trivial.
        assert_eq!(sylvester_resultant(&f, &f.derivative()), gf(2).one());
        assert_eq!(poly(q(), &[3]).discriminant(), Err(Error::ConstantPolynomial));
        // cubic closed form: disc(T^3 + pT + q) = -4p^3 - 27q^2
        assert_eq!(
            poly(q(), &[1, -2, 0, 1]).discriminant().unwrap(),
            q().from_i64(-4 * -8 - 27)
        );
    }

    #[test]
    fn separability_examples() {
        assert!(poly(gf(2), &[1, 1, 1]).is_separable().unwrap());
        assert!(!poly(gf(2), &[1, 0, 1]).is_separable().unwrap());
        assert!(!poly(q(), &[0, 0, -1, 1]).is_separable().unwrap());
        assert_eq!(poly(q(), &[0, 2]).is_separable(), Err(Error::NotMonic));
    }

    #[test]
    fn squarefree_examples() {
        assert!(poly(q(), &[-1, 0, 1]).is_squarefree().unwrap());
        assert!(!poly(gf(2), &[1, 0, 1]).is_squarefree().unwrap());
        assert!(!poly(q(), &[0, 0, -1, 1]).is_squarefree().unwrap());
        // (X+1)^2 (X^2+X+1) over GF(2) mixes both branches
        let f = &poly(gf(2), &[1, 0, 1]) * &poly(gf(2), &[1, 1, 1]);
        let dec = f.squarefree_decomposition().unwrap();
        let rebuilt = dec
            .iter()
            .fold(UniPoly::one(gf(2)), |acc, (h, e)| &acc * &h.pow(*e));
        assert_eq!(rebuilt, f);
        assert_eq!(f.squarefree_part().unwrap(), &poly(gf(2), &[1, 1]) * &poly(gf(2), &[1, 1, 1]));
        // X^3 (X + 1)^4 over GF(3): multiplicity 3 lands in the p-th root branch
        let g = &poly(gf(3), &[0, 0, 0, 1]) * &poly(gf(3), &[1, 1]).pow(4);
        let dec = g.squarefree_decomposition().unwrap();
        let mut mults: Vec<usize> = dec.iter().map(|(_, e)| *e).collect();
        mults.sort();
        assert_eq!(mults, vec![3, 4]);
    }

    #[test]
    fn coprime_split_examples() {
        let f = poly(q(), &[0, 0, -1, 1]);
        assert_eq!(
            f.coprime_split().unwrap(),
            (poly(q(), &[-1, 1]), poly(q(), &[0, 0, 1]))
        );
        let g = &poly(q(), &[-1, 1]).pow(2) * &poly(q(), &[-2, 1]);
        assert_eq!(
            g.coprime_split().unwrap(),
            (poly(q(), &[-2, 1]), poly(q(), &[-1, 1]).pow(2))
        );
        assert_eq!(
            poly(gf(2), &[1, 1, 1]).coprime_split(),
            Err(Error::AlreadySeparable)
        );
        assert_eq!(poly(gf(2), &[1, 0, 1]).coprime_split(), Err(Error::ZeroDerivative));
        assert_eq!(poly(q(), &[0, 0, 1]).coprime_split(), Err(Error::NoSimpleFactor));
    }

    #[test]
    fn pth_power_examples() {
        let f = poly(gf(2), &[1, 0, 1, 0, 1]);
        let g = f.pth_power_decompose().unwrap();
        assert_eq!(g, poly(gf(2), &[1, 1, 1]));
        assert_eq!(g.pow(2), f);
        assert_eq!(
            poly(gf(2), &[1, 0, 1]).pth_power_decompose().unwrap(),
            poly(gf(2), &[1, 1])
        );
        assert_eq!(
            poly(gf(3), &[0, 0, 0, 1]).pth_power_decompose().unwrap(),
            poly(gf(3), &[0, 1])
        );
        assert_eq!(
            poly(q(), &[1, 0, 1]).pth_power_decompose(),
            Err(Error::CharacteristicZero)
        );
        assert_eq!(
            poly(gf(2), &[1, 1, 1]).pth_power_decompose(),
            Err(Error::DerivativeNonzero)
        );
    }

    #[test]
    fn display() {
        assert_eq!(poly(q(), &[1, 0, -10, 0, 1]).to_string(), "T^4 - 10*T^2 + 1");
        assert_eq!(poly(gf(2), &[1, 1, 1]).display_in("X"), "X^2 + X + 1");
        assert_eq!(UniPoly::zero(q()).to_string(), "0");
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![Just(q()), Just(gf(2)), Just(gf(3)), Just(gf(5))]
    }

    fn poly_strategy(k: Field, max_deg: usize) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-5i64..=5, 0..=max_deg + 1).prop_map(move |c| UniPoly::from_i64s(k, &c))
    }

    fn monic_strategy(k: Field, max_deg: usize) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-5i64..=5, 1..=max_deg).prop_map(move |mut c| {
            c.push(1);
            UniPoly::from_i64s(k, &c)
        })
    }

    proptest! {
        #[test]
        fn bezout_identity((f, g) in field_strategy().prop_flat_map(|k| (poly_strategy(k, 8), poly_strategy(k, 8)))) {
            prop_assume!(!(f.is_zero() && g.is_zero()));
            let (d, u, v) = UniPoly::extended_gcd(&f, &g).unwrap();
            prop_assert!(d.is_monic());
            prop_assert_eq!(&(&u * &f) + &(&v * &g), d.clone());
            prop_assert!(f.rem(&d).is_zero() && g.rem(&d).is_zero());
        }

        #[test]
        fn separable_iff_discriminant_nonzero(f in field_strategy().prop_flat_map(|k| monic_strategy(k, 6))) {
            prop_assert_eq!(f.is_separable().unwrap(), !f.discriminant().unwrap().is_zero());
        }

        #[test]
        fn resultant_matches_sylvester((f, g) in field_strategy().prop_flat_map(|k| (poly_strategy(k, 5), poly_strategy(k, 5)))) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assert_eq!(UniPoly::resultant(&f, &g).unwrap(), sylvester_resultant(&f, &g));
        }

        #[test]
        fn leibniz((f, g) in field_strategy().prop_flat_map(|k| (poly_strategy(k, 6), poly_strategy(k, 6)))) {
            let lhs = (&f * &g).derivative();
            let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn coprime_split_contracts(f in field_strategy().prop_flat_map(|k| monic_strategy(k, 6)), sq in monic_strategy(q(), 2)) {
            // force a repeated factor by multiplying with a square in the same field
            let k = f.field();
            let s = UniPoly::new(k, sq.coeffs().iter().map(|c| match c {
                Scalar::Rational(r) => k.from_bigint(r.numer()),
                other => other.clone(),
            }).collect());
            let g = &f * &s.pow(2);
            if let Ok((f1, f2)) = g.coprime_split() {
                let d = g.derivative();
                prop_assert_eq!(&f1 * &f2, g.clone());
                prop_assert!(f1.is_monic() && f2.is_monic());
                prop_assert!(UniPoly::gcd(&f1, &f2).is_one());
                prop_assert!(UniPoly::gcd(&f1, &d).is_one());
                prop_assert!(f1.degree() < g.degree() && f2.degree() < g.degree());
            }
        }

        #[test]
        fn pth_power_roundtrip(p in prop::sample::select(vec![2u64, 3, 5]), c in prop::collection::vec(0i64..5, 0..4)) {
            let k = gf(p);
            let mut coeffs = c;
            coeffs.push(1);
            let g1 = UniPoly::from_i64s(k, &coeffs);
            let f = g1.pow(p as usize);
            prop_assert!(f.derivative().is_zero());
            prop_assert_eq!(f.pth_power_decompose().unwrap().pow(p as usize), f);
        }

        #[test]
        fn squarefree_decomposition_rebuilds(f in field_strategy().prop_flat_map(|k| monic_strategy(k, 6))) {
            let dec = f.squarefree_decomposition().unwrap();
            let rebuilt = dec.iter().fold(UniPoly::one(f.field()), |acc, (h, e)| &acc * &h.pow(*e));
            prop_assert_eq!(rebuilt, f.clone());
            // over perfect fields squarefree and separable coincide
            prop_assert_eq!(f.is_squarefree().unwrap(), f.is_separable().unwrap());
        }
    }
}
