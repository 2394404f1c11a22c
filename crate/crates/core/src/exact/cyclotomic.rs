//! Cyclotomic field elements in canonical form.
//!
//! An element of `Q(zeta_n)` is stored as its coordinate vector in the power
//! basis `1, zeta_n, ..., zeta_n^(phi(n)-1)`, obtained by reducing modulo the
//! n-th cyclotomic polynomial. Two elements of the same field are equal
//! exactly when their stored vectors agree, so equality is structural once
//! conductors are aligned. Stored conductors are never congruent to 2 mod 4
//! (those fields coincide with the field of half the conductor).

use super::linalg::rat_solve;
use super::{divisors, euler_phi, gcd_u64, lcm_u64, Rat};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Reduction data for one cyclotomic field `Q(zeta_n)`.
pub struct CycField {
    pub n: u64,
    pub phi: usize,
    /// `red[m - phi]` holds the power-basis coordinates of `zeta_n^m`
    /// for `m` in `phi .. n`.
    red: Vec<Vec<Rat>>,
}

impl CycField {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1 && (n == 1 || n % 4 != 2), "conductor must not be 2 mod 4");
        let phi = euler_phi(n) as usize;
        let cyc = cyclotomic_poly(n);
        debug_assert_eq!(cyc.len(), phi + 1);
        let mut red: Vec<Vec<Rat>> = Vec::with_capacity((n as usize).saturating_sub(phi));
        if (phi as u64) < n {
            // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
            let base: Vec<Rat> = cyc[..phi]
                .iter()
                .map(|c| -Rat::from_integer(c.clone()))
                .collect();
            red.push(base);
            for _ in (phi as u64 + 1)..n {
                let prev = red.last().unwrap();
                let mut next = vec![Rat::zero(); phi];
                // multiply by zeta: shift, then fold the overflow term back in
                let carry = prev[phi - 1].clone();
                for j in (1..phi).rev() {
                    next[j] = prev[j - 1].clone();
                }
                if !carry.is_zero() {
                    let top = red[0].clone();
                    for j in 0..phi {
                        let add = &top[j] * &carry;
                        next[j] = &next[j] + &add;
                    }
                }
                red.push(next);
            }
        }
        CycField { n, phi, red }
    }

    /// Power-basis coordinates of `zeta_n^e` (e arbitrary).
    pub fn root_coords(&self, e: u64) -> Vec<Rat> {
        let e = (e % self.n) as usize;
        let mut v = vec![Rat::zero(); self.phi];
        if e < self.phi {
            v[e] = Rat::one();
        } else {
            v.clone_from(&self.red[e - self.phi]);
        }
        v
    }

    fn reduce_exponent_into(&self, acc: &mut [Rat], e: u64, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let e = (e % self.n) as usize;
        if e < self.phi {
            acc[e] = &acc[e] + coeff;
        } else {
            let row = &self.red[e - self.phi];
            for j in 0..self.phi {
                if !row[j].is_zero() {
                    let add = &row[j] * coeff;
                    acc[j] = &acc[j] + &add;
                }
            }
        }
    }
}

/// Integer-coefficient cyclotomic polynomial, ascending coefficients.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    // Phi_d computed for every divisor d of n by the quotient formula.
    let divs = divisors(n);
    let mut table: Vec<(u64, Vec<BigInt>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        // x^d - 1
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for &(d2, ref p) in &table {
            if d % d2 == 0 {
                num = int_poly_div_exact(&num, p);
            }
        }
        table.push((d, num));
    }
    table.pop().unwrap().1
}

/// Exact division of integer polynomials (remainder known to vanish).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        // den is monic for all cyclotomic divisors used here
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dd {
            let sub = &den[j] * &c;
            rem[k + j] -= sub;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

#[cfg(feature = "std")]
mod field_cache {
    use super::CycField;
    use alloc::sync::Arc;
    use std::collections::BTreeMap;
    use std::sync::{Mutex, OnceLock};

    static CACHE: OnceLock<Mutex<BTreeMap<u64, Arc<CycField>>>> = OnceLock::new();

    pub fn field(n: u64) -> Arc<CycField> {
        let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
        let mut guard = cache.lock().unwrap();
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(CycField::new(n)))
            .clone()
    }
}

/// Shared handle to the reduction data of `Q(zeta_n)`.
pub fn field(n: u64) -> Arc<CycField> {
    #[cfg(feature = "std")]
    {
        field_cache::field(n)
    }
    #[cfg(not(feature = "std"))]
    {
        Arc::new(CycField::new(n))
    }
}

/// An exact element of a cyclotomic field, canonical in the power basis of
/// its stored conductor.
#[derive(Clone)]
pub struct CycNum {
    n: u64,
    c: Vec<Rat>,
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { n: 1, c: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        CycNum { n: 1, c: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNum { n: 1, c: vec![r] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(k)))
    }

    /// `zeta_n^e` as a field element.
    pub fn root(n: u64, e: i64) -> Self {
        assert!(n >= 1);
        let e = e.rem_euclid(n as i64) as u64;
        let g = gcd_u64(n, if e == 0 { n } else { e });
        let (n, e) = (n / g, e / g); // primitive order
        if n == 1 {
            return Self::one();
        }
        if n == 2 {
            return Self::from_int(-1);
        }
        if n % 4 == 2 {
            // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
            let m = n / 2;
            let f = field(m);
            let exp = ((e % m) as u128 * ((m + 1) / 2) as u128 % m as u128) as u64;
            let out = CycNum { n: m, c: f.root_coords(exp) };
            return if e % 2 == 1 { out.neg() } else { out };
        }
        let f = field(n);
        CycNum { n, c: f.root_coords(e) }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// Rational value if the element is stored at conductor one, or after
    /// descending to it.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.n == 1 {
            return Some(self.c[0].clone());
        }
        if self.c[1..].iter().all(|x| x.is_zero()) {
            return Some(self.c[0].clone());
        }
        let m = self.minimized();
        if m.n == 1 {
            Some(m.c[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.to_rat().is_some()
    }

    /// Coordinates of `self` inside `Q(zeta_target)`; `self.n` must divide
    /// `target` and `target` must not be 2 mod 4.
    pub fn lift_coords(&self, target: u64) -> Vec<Rat> {
        assert!(target % self.n == 0);
        if target == self.n {
            return self.c.clone();
        }
        let f = field(target);
        let step = target / self.n;
        let mut acc = vec![Rat::zero(); f.phi];
        for (j, coeff) in self.c.iter().enumerate() {
            f.reduce_exponent_into(&mut acc, j as u64 * step, coeff);
        }
        acc
    }

    pub fn lift_to(&self, target: u64) -> CycNum {
        CycNum { n: target, c: self.lift_coords(target) }
    }

    fn common_field(&self, other: &CycNum) -> u64 {
        lcm_u64(self.n, other.n)
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let l = self.common_field(other);
        let mut a = self.lift_coords(l);
        let b = other.lift_coords(l);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x = &*x + y;
        }
        CycNum { n: l, c: a }
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        let l = self.common_field(other);
        let mut a = self.lift_coords(l);
        let b = other.lift_coords(l);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x = &*x - y;
        }
        CycNum { n: l, c: a }
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            n: self.n,
            c: self.c.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> CycNum {
        CycNum {
            n: self.n,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        // fast paths for rational factors
        if self.n == 1 {
            return other.scale(&self.c[0]);
        }
        if other.n == 1 {
            return self.scale(&other.c[0]);
        }
        let l = self.common_field(other);
        let a = self.lift_coords(l);
        let b = other.lift_coords(l);
        let f = field(l);
        let phi = f.phi;
        let mut conv = vec![Rat::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let add = x * y;
                conv[i + j] = &conv[i + j] + &add;
            }
        }
        let mut acc: Vec<Rat> = conv[..phi].to_vec();
        for (m, coeff) in conv.iter().enumerate().skip(phi) {
            f.reduce_exponent_into(&mut acc, m as u64, coeff);
        }
        CycNum { n: l, c: acc }
    }

    pub fn inv(&self) -> Option<CycNum> {
        if self.is_zero() {
            return None;
        }
        if self.n == 1 {
            return Some(CycNum { n: 1, c: vec![self.c[0].recip()] });
        }
        let cyc: Vec<Rat> = cyclotomic_poly(self.n)
            .into_iter()
            .map(Rat::from_integer)
            .collect();
        let (g, u) = poly_half_ext_gcd(&self.c, &cyc);
        // g is a nonzero constant: the cyclotomic polynomial is irreducible.
        debug_assert!(poly_degree(&g) == Some(0));
        let ginv = g[0].recip();
        let phi = euler_phi(self.n) as usize;
        let mut c = vec![Rat::zero(); phi];
        for (j, x) in u.iter().enumerate() {
            if j < phi {
                c[j] = x * &ginv;
            } else {
                debug_assert!(x.is_zero());
            }
        }
        Some(CycNum { n: self.n, c })
    }

    pub fn div(&self, other: &CycNum) -> Option<CycNum> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> CycNum {
        if k == 0 {
            return CycNum::one();
        }
        let base = if k < 0 {
            self.inv().expect("pow of zero with negative exponent")
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = CycNum::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Galois automorphism `zeta_n -> zeta_n^t`, `gcd(t, n) = 1`.
    pub fn galois_apply(&self, t: u64) -> CycNum {
        assert_eq!(gcd_u64(t % self.n, self.n), 1, "galois exponent not coprime");
        if self.n == 1 {
            return self.clone();
        }
        let f = field(self.n);
        let mut acc = vec![Rat::zero(); f.phi];
        for (j, coeff) in self.c.iter().enumerate() {
            f.reduce_exponent_into(&mut acc, (j as u64 * (t % self.n)) % self.n, coeff);
        }
        CycNum { n: self.n, c: acc }
    }

    /// Complex conjugation.
    pub fn conj(&self) -> CycNum {
        if self.n == 1 {
            self.clone()
        } else {
            self.galois_apply(self.n - 1)
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj().eq(self)
    }

    /// Trace down to the rationals from the stored field.
    pub fn trace_to_q(&self) -> Rat {
        let mut t = Rat::zero();
        for (j, coeff) in self.c.iter().enumerate() {
            if !coeff.is_zero() {
                t += coeff * &super::root_trace(self.n, j as u64);
            }
        }
        t
    }

    /// Element rewritten at its minimal conductor.
    pub fn minimized(&self) -> CycNum {
        if self.n == 1 {
            return self.clone();
        }
        if self.c[1..].iter().all(|x| x.is_zero()) {
            return CycNum { n: 1, c: vec![self.c[0].clone()] };
        }
        for d in divisors(self.n) {
            if d == self.n {
                break;
            }
            if d > 2 && d % 4 == 2 {
                continue;
            }
            let d = if d <= 2 { 1 } else { d };
            if let Some(c) = self.descend_coords(d) {
                return CycNum { n: d, c };
            }
        }
        self.clone()
    }

    /// Minimal cyclotomic conductor containing this element.
    pub fn minimal_conductor(&self) -> u64 {
        self.minimized().n
    }

    /// Coordinates in `Q(zeta_d)` if the element lies there (`d | n`).
    fn descend_coords(&self, d: u64) -> Option<Vec<Rat>> {
        let phi_d = euler_phi(d) as usize;
        let basis_cols: Vec<Vec<Rat>> = (0..phi_d)
            .map(|i| {
                CycNum::root(d, i as i64)
                    .lift_coords(self.n)
            })
            .collect();
        // rows of the solve: one per coordinate of the big field
        let phi_n = self.c.len();
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(phi_n);
        for r in 0..phi_n {
            rows.push(basis_cols.iter().map(|col| col[r].clone()).collect());
        }
        rat_solve(&rows, &self.c)
    }

    /// All distinct Galois conjugates, at minimal conductor, in the order of
    /// increasing exponent of the automorphism.
    pub fn galois_conjugates(&self) -> Vec<CycNum> {
        let m = self.minimized();
        if m.n == 1 {
            return vec![m];
        }
        let mut out: Vec<CycNum> = Vec::new();
        for t in 1..m.n {
            if gcd_u64(t, m.n) != 1 {
                continue;
            }
            let img = m.galois_apply(t);
            if !out.iter().any(|x| x.eq(&img)) {
                out.push(img);
            }
        }
        out
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let l = self.common_field(other);
        self.lift_coords(l) == other.lift_coords(l)
    }
}

impl Eq for CycNum {}

impl core::fmt::Debug for CycNum {
    fn fmt(&self, fm: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(fm, "Cyc(n={}; ", self.n)?;
        let mut first = true;
        for (j, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(fm, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(fm, "{}", c)?;
            } else {
                write!(fm, "{}*z^{}", c, j)?;
            }
        }
        if first {
            write!(fm, "0")?;
        }
        write!(fm, ")")
    }
}

fn poly_degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Half-extended gcd over Q[x]: returns `(g, u)` with `u*a = g (mod b)`
/// up to the usual Bezout normalization.
fn poly_half_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0 = b.to_vec();
    let mut r1 = a.to_vec();
    let mut u0: Vec<Rat> = vec![Rat::zero()];
    let mut u1: Vec<Rat> = vec![Rat::one()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let u2 = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    (r0, u0)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (da, db) = (poly_degree(a), poly_degree(b));
    let (da, db) = match (da, db) {
        (Some(x), Some(y)) => (x, y),
        _ => return vec![Rat::zero()],
    };
    let mut out = vec![Rat::zero(); da + db + 1];
    for i in 0..=da {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..=db {
            if b[j].is_zero() {
                continue;
            }
            let add = &a[i] * &b[j];
            out[i + j] = &out[i + j] + &add;
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let len = a.len().max(b.len());
    let mut out = vec![Rat::zero(); len];
    for (i, item) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
        *item = x - y;
    }
    out
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = poly_degree(den).expect("division by zero polynomial");
    let mut rem = num.to_vec();
    let dn = match poly_degree(&rem) {
        None => return (vec![Rat::zero()], rem),
        Some(d) => d,
    };
    if dn < dd {
        return (vec![Rat::zero()], rem);
    }
    let lead_inv = den[dd].recip();
    let mut quot = vec![Rat::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dd {
            let sub = &den[j] * &c;
            rem[k + j] = &rem[k + j] - &sub;
        }
    }
    (quot, rem)
}

/// A root of unity in lowest terms: `order` is the exact multiplicative
/// order, `exponent` is coprime to it (zero only for the trivial root).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(order: u64, exponent: i64) -> Self {
        assert!(order >= 1);
        let e = exponent.rem_euclid(order as i64) as u64;
        if e == 0 {
            return RootOfUnity { order: 1, exponent: 0 };
        }
        let g = gcd_u64(order, e);
        RootOfUnity {
            order: order / g,
            exponent: e / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exponent: 0 }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn value(&self) -> CycNum {
        CycNum::root(self.order, self.exponent as i64)
    }

    pub fn inverse(&self) -> Self {
        if self.order == 1 {
            *self
        } else {
            RootOfUnity {
                order: self.order,
                exponent: self.order - self.exponent,
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = lcm_u64(self.order, other.order);
        let e = (self.exponent as u128 * (l / self.order) as u128
            + other.exponent as u128 * (l / other.order) as u128)
            % l as u128;
        RootOfUnity::new(l, e as i64)
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.order as i128);
        RootOfUnity::new(self.order, e as i64)
    }

    /// Galois image `zeta -> zeta^t`; `t` must be coprime to the order.
    pub fn galois_apply(&self, t: u64) -> Self {
        self.pow((t % self.order.max(1)) as i64)
    }

    /// Is this root equal to 1 or -1?
    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    /// Angle as a fraction of the full turn, in `[0, 1)`.
    pub fn turn_fraction(&self) -> Rat {
        Rat::new(BigInt::from(self.exponent), BigInt::from(self.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn cyclotomic_polys() {
        let p3 = cyclotomic_poly(3);
        assert_eq!(p3, vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        let p8 = cyclotomic_poly(8);
        assert_eq!(
            p8,
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(0), BigInt::from(0), BigInt::from(1)]
        );
        let p12 = cyclotomic_poly(12);
        assert_eq!(
            p12,
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn basic_identities() {
        // 1 + zeta_3 + zeta_3^2 = 0
        let z = CycNum::root(3, 1);
        let s = CycNum::one().add(&z).add(&z.mul(&z));
        assert!(s.is_zero());
        // zeta_8^2 = zeta_4
        let z8 = CycNum::root(8, 1);
        assert_eq!(z8.mul(&z8), CycNum::root(4, 1));
        // 1 / zeta_5 = zeta_5^4
        let z5 = CycNum::root(5, 1);
        assert_eq!(CycNum::one().div(&z5).unwrap(), CycNum::root(5, 4));
    }

    #[test]
    fn prime_power_sums_vanish() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut s = CycNum::zero();
            for j in 0..p {
                s = s.add(&CycNum::root(p, j as i64));
            }
            assert!(s.is_zero(), "sum of {}-th roots", p);
        }
    }

    #[test]
    fn conductor_two_mod_four_normalized() {
        // zeta_6 = 1 + zeta_3 is stored at conductor 3
        let z6 = CycNum::root(6, 1);
        assert_eq!(z6.conductor(), 3);
        let expect = CycNum::one().add(&CycNum::root(3, 1));
        assert_eq!(z6, expect);
        // and has multiplicative order 6
        assert!(z6.pow(6).is_one());
        assert!(!z6.pow(3).is_one());
    }

    #[test]
    fn minimization() {
        // zeta_8^2 stored at conductor 8 descends to 4
        let z8 = CycNum::root(8, 1);
        let sq = z8.mul(&z8);
        assert_eq!(sq.conductor(), 8);
        assert_eq!(sq.minimal_conductor(), 4);
        // golden ratio combination lives at conductor 5
        let g = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        assert_eq!(g.minimal_conductor(), 5);
        let r = CycNum::from_rat(rat_int(7));
        assert_eq!(r.minimal_conductor(), 1);
    }

    #[test]
    fn galois_conjugates_examples() {
        assert_eq!(CycNum::one().galois_conjugates().len(), 1);
        let z3 = CycNum::root(3, 1);
        let conj = z3.galois_conjugates();
        assert_eq!(conj.len(), 2);
        assert!(conj.contains(&CycNum::root(3, 2)));
        let g = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        let cg = g.galois_conjugates();
        assert_eq!(cg.len(), 2);
        let other = CycNum::root(5, 2).add(&CycNum::root(5, 3));
        assert!(cg.contains(&g) && cg.contains(&other));
    }

    #[test]
    fn inverse_round_trip() {
        let x = CycNum::root(7, 3)
            .add(&CycNum::root(7, 5).scale(&rat_int(2)))
            .add(&CycNum::from_int(1));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn trace_values() {
        // Tr(zeta_5) = -1 over Q(zeta_5)
        assert_eq!(CycNum::root(5, 1).trace_to_q(), rat_int(-1));
        assert_eq!(CycNum::one().trace_to_q(), rat_int(1));
    }

    #[test]
    fn root_of_unity_canonical() {
        let a = RootOfUnity::new(10, 4);
        assert_eq!((a.order(), a.exponent()), (5, 2));
        let b = RootOfUnity::new(8, 3).mul(&RootOfUnity::new(8, 7));
        assert_eq!((b.order(), b.exponent()), (4, 1));
        assert_eq!(RootOfUnity::new(5, 2).inverse(), RootOfUnity::new(5, 3));
    }
}
