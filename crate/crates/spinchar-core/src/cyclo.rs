//! Exact arithmetic in the cyclotomic field Q(zeta_L).
//!
//! Elements live in the power basis 1, zeta, ..., zeta^{phi(L)-1} with rational
//! coordinates; reduction happens through a precomputed table of the rows
//! zeta^e mod Phi_L. One global order L is fixed per computation (for the
//! groups G(m,1,n) the natural choice is L = lcm(8, 2m), which houses i,
//! sqrt(2) and the color characters simultaneously); mixing orders is an error.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Shared reduction data for Q(zeta_L).
pub struct CycloField {
    l: u64,
    phi: usize,
    /// `red[e]` holds the coordinates of zeta^e in the power basis, 0 <= e < L.
    red: Vec<Vec<BigRational>>,
}

type Poly = Vec<BigRational>; // dense, ascending, no trailing zeros

fn pnorm(mut p: Poly) -> Poly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn pmul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    pnorm(out)
}

fn psub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] -= cb;
    }
    pnorm(out)
}

/// Quotient and remainder of `a` by nonzero `b`.
fn pdivrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    let mut quo = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / &lead;
        quo[dr - db] = c.clone();
        for i in 0..=db {
            let t = &c * &b[i];
            rem[dr - db + i] -= t;
        }
        rem = pnorm(rem);
        if rem.is_empty() {
            break;
        }
    }
    (pnorm(quo), rem)
}

/// The L-th cyclotomic polynomial, integer coefficients, ascending.
fn cyclotomic_poly(l: u64) -> Poly {
    let mut cache: BTreeMap<u64, Poly> = BTreeMap::new();
    for d in 1..=l {
        if l % d != 0 {
            continue;
        }
        // x^d - 1
        let mut p = vec![BigRational::zero(); d as usize + 1];
        p[0] = -BigRational::one();
        p[d as usize] = BigRational::one();
        for (e, q) in cache.iter() {
            if d % e == 0 && *e < d {
                let (quo, rem) = pdivrem(&p, q);
                debug_assert!(rem.is_empty());
                p = quo;
            }
        }
        cache.insert(d, p);
    }
    cache.remove(&l).unwrap()
}

impl CycloField {
    /// Build the field of order `l` (the cyclotomic polynomial and all
    /// reduction rows zeta^e, 0 <= e < l).
    pub fn new(l: u64) -> Arc<CycloField> {
        assert!(l >= 1, "cyclotomic order must be positive");
        let phi_poly = cyclotomic_poly(l);
        let phi = phi_poly.len() - 1;
        let mut red: Vec<Vec<BigRational>> = Vec::with_capacity(l as usize);
        for e in 0..l as usize {
            if e < phi {
                let mut row = vec![BigRational::zero(); phi];
                row[e] = BigRational::one();
                red.push(row);
            } else {
                let prev = &red[e - 1];
                let top = prev[phi - 1].clone();
                let mut row = vec![BigRational::zero(); phi];
                for i in 1..phi {
                    row[i] = prev[i - 1].clone();
                }
                if !top.is_zero() {
                    for i in 0..phi {
                        row[i] -= &top * &phi_poly[i];
                    }
                }
                red.push(row);
            }
        }
        Arc::new(CycloField { l, phi, red })
    }

    /// Field for the spin character theory of G(m,1,n): L = lcm(8, 2m).
    pub fn for_group(m: u32) -> Arc<CycloField> {
        let a = 8u64;
        let b = 2 * m as u64;
        CycloField::new(a / gcd(a, b) * b)
    }

    pub fn order(&self) -> u64 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.phi
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An element of Q(zeta_L), canonical sparse form (no zero coefficients).
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    coeffs: BTreeMap<u32, BigRational>,
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.l == other.field.l && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *e == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "z^{}", e)?;
            } else {
                write!(f, "{}*z^{}", c, e)?;
            }
        }
        Ok(())
    }
}

impl Cyclo {
    pub fn zero(field: &Arc<CycloField>) -> Cyclo {
        Cyclo { field: field.clone(), coeffs: BTreeMap::new() }
    }

    pub fn one(field: &Arc<CycloField>) -> Cyclo {
        Cyclo::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CycloField>, r: BigRational) -> Cyclo {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclo { field: field.clone(), coeffs }
    }

    pub fn from_int(field: &Arc<CycloField>, k: i64) -> Cyclo {
        Cyclo::from_rational(field, BigRational::from_integer(BigInt::from(k)))
    }

    /// zeta_L^a (any integer a, reduced mod L).
    pub fn root(field: &Arc<CycloField>, a: i64) -> Cyclo {
        let l = field.l as i64;
        let e = a.rem_euclid(l) as usize;
        let row = &field.red[e];
        let mut coeffs = BTreeMap::new();
        for (i, c) in row.iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(i as u32, c.clone());
            }
        }
        Cyclo { field: field.clone(), coeffs }
    }

    /// The imaginary unit i = zeta_L^{L/4}; requires 4 | L.
    pub fn i_unit(field: &Arc<CycloField>) -> Cyclo {
        assert!(field.l % 4 == 0, "i needs 4 | L");
        Cyclo::root(field, (field.l / 4) as i64)
    }

    /// sqrt(2) = zeta_8 + zeta_8^{-1}; requires 8 | L.
    pub fn sqrt2(field: &Arc<CycloField>) -> Cyclo {
        assert!(field.l % 8 == 0, "sqrt2 needs 8 | L");
        let s = (field.l / 8) as i64;
        Cyclo::root(field, s).add(&Cyclo::root(field, -s))
    }

    /// 2^{k/2} for any integer k (possibly negative).
    pub fn sqrt2_power(field: &Arc<CycloField>, k: i64) -> Cyclo {
        let q = k.div_euclid(2);
        let r = k.rem_euclid(2);
        let two_q = if q >= 0 {
            BigRational::from_integer(BigInt::from(2).pow(q as u32))
        } else {
            BigRational::new(BigInt::one(), BigInt::from(2).pow((-q) as u32))
        };
        let base = Cyclo::from_rational(field, two_q);
        if r == 1 {
            base.mul(&Cyclo::sqrt2(field))
        } else {
            base
        }
    }

    /// Exact sqrt(r) for a nonnegative integer r, via quadratic Gauss sums.
    /// Returns None when the value does not lie in Q(zeta_L).
    pub fn sqrt_nat(field: &Arc<CycloField>, r: u64) -> Option<Cyclo> {
        if r == 0 {
            return Some(Cyclo::zero(field));
        }
        // r = 2^a * b^2 * s with s odd squarefree
        let mut rest = r;
        let mut a = 0u32;
        while rest % 2 == 0 {
            rest /= 2;
            a += 1;
        }
        let mut b: u64 = 1;
        let mut s: u64 = 1;
        let mut d = 3u64;
        while d * d <= rest {
            if rest % d == 0 {
                let mut e = 0;
                while rest % d == 0 {
                    rest /= d;
                    e += 1;
                }
                b *= d.pow(e / 2);
                if e % 2 == 1 {
                    s *= d;
                }
            }
            d += 2;
        }
        s *= rest; // leftover prime
        let mut out = Cyclo::from_rational(
            field,
            BigRational::from_integer(BigInt::from(2).pow(a / 2) * BigInt::from(b)),
        );
        if a % 2 == 1 {
            if field.l % 8 != 0 {
                return None;
            }
            out = out.mul(&Cyclo::sqrt2(field));
        }
        if s > 1 {
            if field.l % s != 0 || (s % 4 == 3 && field.l % 4 != 0) {
                return None;
            }
            let step = (field.l / s) as i64;
            let mut gauss = Cyclo::zero(field);
            for t in 0..s as i64 {
                gauss = gauss.add(&Cyclo::root(field, step * ((t * t) % s as i64)));
            }
            if s % 4 == 3 {
                // gauss = i*sqrt(s)
                gauss = gauss.mul(&Cyclo::i_unit(field).neg());
            }
            out = out.mul(&gauss);
        }
        Some(out)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.l
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Some(q) when the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn coeff_entries(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    fn check_order(&self, other: &Cyclo) {
        assert!(
            self.field.l == other.field.l,
            "cyclotomic order mismatch: {} vs {}",
            self.field.l,
            other.field.l
        );
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        self.check_order(other);
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        Cyclo { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> Cyclo {
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect();
        Cyclo { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Cyclo {
        if r.is_zero() {
            return Cyclo::zero(&self.field);
        }
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect();
        Cyclo { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        self.check_order(other);
        let phi = self.field.phi;
        let l = self.field.l as usize;
        let mut dense = vec![BigRational::zero(); phi];
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let c = c1 * c2;
                let e = (*e1 as usize + *e2 as usize) % l;
                if e < phi {
                    dense[e] += c;
                } else {
                    for (i, t) in self.field.red[e].iter().enumerate() {
                        if !t.is_zero() {
                            dense[i] += &c * t;
                        }
                    }
                }
            }
        }
        let mut coeffs = BTreeMap::new();
        for (i, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(i as u32, c);
            }
        }
        Cyclo { field: self.field.clone(), coeffs }
    }

    /// Complex conjugate (zeta -> zeta^{-1}).
    pub fn conj(&self) -> Cyclo {
        let l = self.field.l as i64;
        let mut out = Cyclo::zero(&self.field);
        for (e, c) in &self.coeffs {
            out = out.add(&Cyclo::root(&self.field, l - *e as i64).scale(c));
        }
        out
    }

    /// Multiplicative inverse; panics on zero (checked variant below).
    pub fn inv(&self) -> Cyclo {
        self.checked_inv().expect("division by zero in Q(zeta_L)")
    }

    pub fn checked_inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        // extended Euclid against Phi_L in Q[x]
        let phi_poly = {
            // reconstruct Phi from the reduction row of x^phi: x^phi = -sum Phi_i x^i
            let mut p = vec![BigRational::zero(); self.field.phi + 1];
            if (self.field.phi as u64) < self.field.l {
                for (i, c) in self.field.red[self.field.phi].iter().enumerate() {
                    p[i] = -c.clone();
                }
            } else {
                // L = 1 or 2: phi == L, x^phi reduces via zeta^L = 1
                p[0] = -BigRational::one();
            }
            p[self.field.phi] = BigRational::one();
            pnorm(p)
        };
        let mut a = vec![BigRational::zero(); self.field.phi];
        for (e, c) in &self.coeffs {
            a[*e as usize] = c.clone();
        }
        let a = pnorm(a);
        let (mut r0, mut r1) = (a, phi_poly.clone());
        let (mut s0, mut s1): (Poly, Poly) = (vec![BigRational::one()], vec![]);
        while !r1.is_empty() {
            let (q, rem) = pdivrem(&r0, &r1);
            let s2 = psub(&s0, &pmul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd (nonzero constant), u = s0: u*a = r0 mod Phi
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].clone();
        let mut coeffs = BTreeMap::new();
        for (i, c) in s0.iter().enumerate() {
            let v = c / &g;
            if !v.is_zero() {
                coeffs.insert(i as u32, v);
            }
        }
        Some(Cyclo { field: self.field.clone(), coeffs })
    }

    pub fn div(&self, other: &Cyclo) -> Cyclo {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> Cyclo {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut acc = Cyclo::one(&self.field);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Numeric value as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::Float;
        let mut re = 0.0f64;
        let mut im = 0.0f64;
        let l = self.field.l as f64;
        for (e, c) in &self.coeffs {
            let v = c.to_f64().unwrap_or_else(|| {
                // fall back through numerator/denominator separately
                let n = c.numer().to_f64().unwrap();
                let d = c.denom().to_f64().unwrap();
                n / d
            });
            let ang = 2.0 * core::f64::consts::PI * (*e as f64) / l;
            re += v * Float::cos(ang);
            im += v * Float::sin(ang);
        }
        (re, im)
    }

    /// |x|^2 = x * conj(x) as a rational (the product is real).
    pub fn abs_square(&self) -> BigRational {
        self.mul(&self.conj())
            .as_rational()
            .expect("x * conj(x) must be rational for cyclotomic x of full-orbit support")
    }

    /// Render the canonical text form used by the CLI: {"order":L,"coeffs":{"e":"p/q"}}.
    pub fn to_json(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "{{\"order\":{},\"coeffs\":{{", self.field.l);
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                s.push(',');
            }
            first = false;
            let _ = write!(s, "\"{}\":\"{}\"", e, c);
        }
        s.push_str("}}");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f8() -> Arc<CycloField> {
        CycloField::new(8)
    }

    fn f24() -> Arc<CycloField> {
        CycloField::new(24)
    }

    #[test]
    fn i_squares_to_minus_one() {
        let f = f8();
        let i = Cyclo::i_unit(&f);
        assert_eq!(i.mul(&i), Cyclo::from_int(&f, -1));
        assert_eq!(i.conj(), i.neg());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        for l in [8u64, 24, 40] {
            let f = CycloField::new(l);
            let s = Cyclo::sqrt2(&f);
            assert_eq!(s.mul(&s), Cyclo::from_int(&f, 2));
        }
    }

    #[test]
    fn sqrt2_powers() {
        let f = f8();
        let s = Cyclo::sqrt2(&f);
        assert_eq!(Cyclo::sqrt2_power(&f, 0), Cyclo::one(&f));
        assert_eq!(Cyclo::sqrt2_power(&f, 1), s);
        assert_eq!(Cyclo::sqrt2_power(&f, 2), Cyclo::from_int(&f, 2));
        assert_eq!(Cyclo::sqrt2_power(&f, 3), s.scale(&BigRational::from_integer(2.into())));
        // 2^{-1/2} = sqrt2 / 2
        assert_eq!(
            Cyclo::sqrt2_power(&f, -1),
            s.scale(&BigRational::new(1.into(), 2.into()))
        );
        assert_eq!(
            Cyclo::sqrt2_power(&f, -2),
            Cyclo::from_rational(&f, BigRational::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn roots_of_unity_cycle() {
        let f = f8();
        let z = Cyclo::root(&f, 1);
        assert_eq!(z.pow(8), Cyclo::one(&f));
        assert_eq!(z.pow(4), Cyclo::from_int(&f, -1));
        let f24 = f24();
        let w = Cyclo::root(&f24, 4); // zeta_6
        assert_eq!(w.pow(6), Cyclo::one(&f24));
    }

    #[test]
    fn gauss_sqrt_values() {
        let f = f24();
        let s3 = Cyclo::sqrt_nat(&f, 3).unwrap();
        assert_eq!(s3.mul(&s3), Cyclo::from_int(&f, 3));
        let (re, im) = s3.to_complex();
        assert!((re - 1.7320508075688772).abs() < 1e-12 && im.abs() < 1e-12);
        // 5 is not a square in Q(zeta_24)
        assert!(Cyclo::sqrt_nat(&f, 5).is_none());
        let f40 = CycloField::new(40);
        let s5 = Cyclo::sqrt_nat(&f40, 5).unwrap();
        assert_eq!(s5.mul(&s5), Cyclo::from_int(&f40, 5));
        let (re, _) = s5.to_complex();
        assert!(re > 0.0);
        // perfect square and sqrt(8) = 2*sqrt2
        let f8 = f8();
        assert_eq!(Cyclo::sqrt_nat(&f8, 9).unwrap(), Cyclo::from_int(&f8, 3));
        assert_eq!(
            Cyclo::sqrt_nat(&f8, 8).unwrap(),
            Cyclo::sqrt2(&f8).scale(&BigRational::from_integer(2.into()))
        );
    }

    #[test]
    fn inverse_round_trip() {
        let f = f24();
        let x = Cyclo::root(&f, 1)
            .add(&Cyclo::from_int(&f, 2))
            .add(&Cyclo::root(&f, 7).scale(&BigRational::new(3.into(), 5.into())));
        let y = x.inv();
        assert_eq!(x.mul(&y), Cyclo::one(&f));
    }

    #[test]
    fn json_form() {
        let f = f8();
        let x = Cyclo::i_unit(&f).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(x.to_json(), "{\"order\":8,\"coeffs\":{\"2\":\"1/2\"}}");
    }

    fn arb_cyclo(l: u64) -> impl Strategy<Value = Cyclo> {
        let f = CycloField::new(l);
        let deg = f.degree() as u32;
        proptest::collection::btree_map(0..deg, (-6i64..=6, 1i64..=4), 0..4).prop_map(move |m| {
            let mut x = Cyclo::zero(&f);
            for (e, (p, q)) in m {
                x = x.add(
                    &Cyclo::root(&f, e as i64).scale(&BigRational::new(p.into(), q.into())),
                );
            }
            x
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_cyclo(24), b in arb_cyclo(24), c in arb_cyclo(24)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), Cyclo::zero(a.field()));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv()), Cyclo::one(a.field()));
            }
        }

        #[test]
        fn conjugation_is_automorphism(a in arb_cyclo(8), b in arb_cyclo(8)) {
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
            prop_assert_eq!(a.conj().conj(), a);
        }

        #[test]
        fn numeric_consistency(a in arb_cyclo(8), b in arb_cyclo(8)) {
            let (ra, ia) = a.to_complex();
            let (rb, ib) = b.to_complex();
            let (rp, ip) = a.mul(&b).to_complex();
            prop_assert!((rp - (ra * rb - ia * ib)).abs() < 1e-9);
            prop_assert!((ip - (ra * ib + ia * rb)).abs() < 1e-9);
        }
    }
}
