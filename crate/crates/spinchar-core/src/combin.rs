//! Partitions, multipartitions, color vectors, and the exact character
//! combinatorics built on them: Murnaghan-Nakayama for the symmetric group,
//! shifted-diagram weights, the restricted projective character recursion,
//! and the closed character of the basic projective representation.
//!
//! Everything in this module is exact. Square roots that leave the rationals
//! are returned as [`Cyclo`] values in a caller-supplied cyclotomic field.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclo::{Cyclo, CycloField};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build from a weakly decreasing list of positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, String> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(format!("parts not weakly decreasing: {:?}", parts));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(format!("zero part in {:?}", parts));
        }
        Ok(Partition(parts))
    }

    /// Build from any list: sorts decreasing and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Size: sum of the parts.
    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// n - (number of parts).
    pub fn d_stat(&self) -> u32 {
        self.n() - self.len() as u32
    }

    /// Parity of `d_stat`: 0 or 1.
    pub fn eps(&self) -> u8 {
        (self.d_stat() % 2) as u8
    }

    /// All parts distinct.
    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// All parts odd.
    pub fn all_parts_odd(&self) -> bool {
        self.0.iter().all(|&p| p % 2 == 1)
    }

    /// Conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.0 {
            for item in parts.iter_mut().take(p as usize) {
                *item += 1;
            }
        }
        Partition(parts)
    }

    /// Multiplicity vector: m[k] = number of parts equal to k (k = 1..=n).
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order z_nu = prod_k k^{m_k} m_k!.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (k, mk) in self.multiplicities() {
            for _ in 0..mk {
                z *= BigUint::from(k);
            }
            z *= factorial(mk);
        }
        z
    }

    /// JSON array form, e.g. `[3,1]`.
    pub fn to_json(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(|p| format!("{}", p)).collect();
        format!("[{}]", inner.join(","))
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// All partitions of n, lexicographically decreasing on the part vector:
/// (n) first, (1,...,1) last.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(n, n, &mut cur, &mut out, &|_| true, &|_| true);
    out
}

/// Partitions of n with all parts odd, in the same order as [`partitions`].
pub fn odd_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(n, n, &mut cur, &mut out, &|p| p % 2 == 1, &|_| true);
    out
}

/// Strict partitions of n (distinct parts), in the same order.
pub fn strict_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(n, n, &mut cur, &mut out, &|_| true, &|cur| {
        cur.windows(2).all(|w| w[0] > w[1])
    });
    out
}

fn gen_partitions(
    rem: u32,
    max: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
    part_ok: &dyn Fn(u32) -> bool,
    final_ok: &dyn Fn(&[u32]) -> bool,
) {
    if rem == 0 {
        if final_ok(cur) {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    let hi = rem.min(max);
    for p in (1..=hi).rev() {
        if !part_ok(p) {
            continue;
        }
        if let Some(&last) = cur.last() {
            if p > last {
                continue;
            }
        }
        cur.push(p);
        gen_partitions(rem - p, p, cur, out, part_ok, final_ok);
        cur.pop();
    }
}

/// Weak compositions of n into k ordered parts, lexicographically decreasing:
/// (n,0,...,0) first, (0,...,0,n) last.
pub fn compositions(k: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if cur.len() == k - 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in (0..=rem).rev() {
            cur.push(c);
            rec(k, rem - c, cur, out);
            cur.pop();
        }
    }
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(k, n, &mut cur, &mut out);
    out
}

pub fn factorial(n: u32) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k.min(n - k) {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// n! / prod_i parts_i! where n = sum(parts).
pub fn multinomial(parts: &[u32]) -> BigUint {
    let n: u32 = parts.iter().sum();
    let mut v = factorial(n);
    for &p in parts {
        v /= factorial(p);
    }
    v
}

/// Dimension of the ordinary irreducible of S_n labeled by `lam`
/// (hook length formula).
pub fn hook_dim(lam: &Partition) -> BigUint {
    let n = lam.n();
    let conj = lam.conjugate();
    let mut num = factorial(n);
    let mut den = BigUint::one();
    for (i, &li) in lam.parts().iter().enumerate() {
        for j in 0..li as usize {
            let hook = (li as usize - j) + (conj.parts()[j] as usize - i) - 1;
            den *= BigUint::from(hook);
        }
    }
    num /= den;
    num
}

/// Ordinary irreducible character of S_n: value of chi^lam on the class of
/// cycle type `nu` (border-strip recursion on beta sets, memoized).
pub fn mn_character(lam: &Partition, nu: &Partition) -> BigInt {
    assert_eq!(lam.n(), nu.n(), "character of S_n needs |lam| = |nu|");
    let mut strips: Vec<u32> = nu.parts().to_vec();
    strips.sort_unstable_by(|a, b| b.cmp(a));
    let mut memo: BTreeMap<(Vec<u32>, usize), BigInt> = BTreeMap::new();
    mn_rec(lam.parts().to_vec(), 0, &strips, &mut memo)
}

fn mn_rec(
    shape: Vec<u32>,
    idx: usize,
    strips: &[u32],
    memo: &mut BTreeMap<(Vec<u32>, usize), BigInt>,
) -> BigInt {
    if idx == strips.len() {
        debug_assert!(shape.is_empty());
        return BigInt::one();
    }
    if let Some(v) = memo.get(&(shape.clone(), idx)) {
        return v.clone();
    }
    let k = strips[idx];
    let rows = shape.len();
    // beta_i = shape_i + (rows-1-i), strictly decreasing
    let beta: Vec<i64> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (rows - 1 - i) as i64)
        .collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - k as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let crossings = beta.iter().filter(|&&x| x > nb && x < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut newbeta = beta.clone();
        newbeta[i] = nb;
        newbeta.sort_unstable_by(|a, b| b.cmp(a));
        let mut newshape: Vec<u32> = newbeta
            .iter()
            .enumerate()
            .map(|(j, &bb)| (bb - (rows - 1 - j) as i64) as u32)
            .collect();
        while newshape.last() == Some(&0) {
            newshape.pop();
        }
        let sub = mn_rec(newshape, idx + 1, strips, memo);
        total += BigInt::from(sign) * sub;
    }
    memo.insert((shape, idx), total.clone());
    total
}

/// Shifted-diagram weight g_lam = n!/(prod lam_i!) * prod_{i<j}
/// (lam_i - lam_j)/(lam_i + lam_j), for strict `lam`. Always a positive
/// integer (the number of standard shifted tableaux).
pub fn g_weight(lam: &Partition) -> BigUint {
    assert!(lam.is_strict(), "g_weight needs a strict partition");
    if lam.is_empty() {
        return BigUint::one();
    }
    let mut val = BigRational::from_integer(BigInt::from(factorial(lam.n())));
    for &p in lam.parts() {
        val /= BigRational::from_integer(BigInt::from(factorial(p)));
    }
    let ps = lam.parts();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            let num = BigInt::from(ps[i]) - BigInt::from(ps[j]);
            let den = BigInt::from(ps[i]) + BigInt::from(ps[j]);
            val *= BigRational::new(num, den);
        }
    }
    assert!(val.is_integer() && val.numer().is_positive());
    val.to_integer().to_biguint().expect("g_weight positive")
}

/// Dimension of the projective irreducible of S_n labeled by strict `lam`:
/// 2^{floor((n-l)/2)} g_lam.
pub fn spin_dim(lam: &Partition) -> BigUint {
    g_weight(lam) << (lam.d_stat() / 2) as usize
}

/// X^lam_nu (the integral normalization of the projective character of S_n)
/// by peeling odd strip lengths k > 1 one at a time, allowed only while
/// every row gap of `lam` exceeds k and the last row exceeds k. Returns
/// `None` when a peel step falls outside that range; callers then report
/// the value as unavailable rather than guessing.
pub fn morris_x(lam: &Partition, nu: &Partition) -> Option<BigInt> {
    assert!(lam.is_strict(), "morris_x needs a strict partition");
    assert_eq!(lam.n(), nu.n(), "morris_x needs |lam| = |nu|");
    if !nu.all_parts_odd() {
        return None;
    }
    let mut strips: Vec<u32> = nu.parts().iter().copied().filter(|&p| p > 1).collect();
    strips.sort_unstable_by(|a, b| b.cmp(a));
    morris_rec(lam.parts().to_vec(), &strips, 0)
}

fn morris_rec(lam: Vec<u32>, strips: &[u32], idx: usize) -> Option<BigInt> {
    if idx == strips.len() {
        return Some(BigInt::from(g_weight(&Partition(lam.clone()))));
    }
    let k = strips[idx];
    let l = lam.len();
    if l == 0 {
        return None;
    }
    // separation: lam_i - lam_{i+1} > k for all i < l, and lam_l > k
    for i in 0..l - 1 {
        if lam[i] - lam[i + 1] <= k {
            return None;
        }
    }
    if lam[l - 1] <= k {
        return None;
    }
    let mut total = BigInt::zero();
    for i in 0..l {
        let mut next = lam.clone();
        next[i] -= k;
        total += morris_rec(next, strips, idx + 1)?;
    }
    Some(total)
}

/// Exponent e with chi^lam_nu = X^lam_nu * 2^{e/2}: e = l(nu) - l(lam) - eps(lam).
/// The value 2^{e/2} is an integer or an integer times sqrt(2).
pub fn spin_norm_exponent(lam: &Partition, nu: &Partition) -> i64 {
    nu.len() as i64 - lam.len() as i64 - lam.eps() as i64
}

/// Parity of the z-exponent relating the preferred class representative
/// t_nu = prod over blocks of t_a...t_{b-1} (with t_j = z^{j-1} r_j) to the
/// plain word sigma'_nu = prod over blocks of r_a...r_{b-1}.
pub fn t_nu_z_exponent(nu: &Partition) -> u8 {
    let mut e: u64 = 0;
    let mut start: u64 = 1;
    for &p in nu.parts() {
        let a = start;
        let b = start + p as u64;
        // letters t_i for a <= i <= b-1, each carrying z^{i-1}
        for i in a..(b - 1) {
            e += i - 1;
        }
        start = b;
    }
    (e % 2) as u8
}

/// chi(tau_lam | t_nu) for all-odd `nu`, when the peeling recursion reaches
/// it: X^lam_nu * 2^{(l(nu)-l(lam)-eps)/2} as an exact cyclotomic number.
pub fn spin_char_at_t(
    field: &Arc<CycloField>,
    lam: &Partition,
    nu: &Partition,
) -> Option<Cyclo> {
    let x = morris_x(lam, nu)?;
    let e = spin_norm_exponent(lam, nu);
    let mut v = Cyclo::sqrt2_power(field, e);
    v = v.scale(&BigRational::from_integer(x));
    Some(v)
}

/// True when chi(tau_lam | sigma') is forced to vanish by the support of
/// projective characters, for sigma' of cycle type `nu` (padded with fixed
/// points so |nu| = |lam|). `nu` here is the type of the underlying
/// permutation; the z-lift does not matter for vanishing.
pub fn tau_forced_zero(lam: &Partition, nu: &Partition) -> bool {
    assert_eq!(lam.n(), nu.n());
    let n = nu.n();
    let sgn_odd = (n - nu.len() as u32) % 2 == 1;
    if sgn_odd {
        if lam.eps() == 0 {
            return true;
        }
        // eps = 1: support meets the odd part only in type lam itself
        lam != nu
    } else {
        if !nu.all_parts_odd() {
            return true;
        }
        // all cycles must fit into rows of lam (exact cover of row sizes)
        !packable(nu.parts(), lam.parts())
    }
}

/// Can the multiset `items` be split into groups with sums exactly `bins`?
fn packable(items: &[u32], bins: &[u32]) -> bool {
    let mut items: Vec<u32> = items.to_vec();
    items.sort_unstable_by(|a, b| b.cmp(a));
    let mut rem: Vec<u32> = bins.to_vec();
    pack_rec(&items, 0, &mut rem)
}

fn pack_rec(items: &[u32], idx: usize, rem: &mut Vec<u32>) -> bool {
    if idx == items.len() {
        return rem.iter().all(|&r| r == 0);
    }
    let it = items[idx];
    let mut tried: BTreeSet<u32> = BTreeSet::new();
    for b in 0..rem.len() {
        if rem[b] >= it && tried.insert(rem[b]) {
            rem[b] -= it;
            if pack_rec(items, idx + 1, rem) {
                rem[b] += it;
                return true;
            }
            rem[b] += it;
        }
    }
    false
}

/// Character of the basic projective representation of S_n on the standard
/// class word sigma'_nu = prod over consecutive blocks K = [a,b] of
/// r_a r_{a+1} ... r_{b-1}:
///  - sigma'_nu even: nonzero iff all parts of nu are odd, value
///    (-1)^{(n-l)/2} 2^{floor((l-1)/2)};
///  - sigma'_nu odd, n even: nonzero iff nu = (n), value i^{n/2-1} sqrt(n/2);
///  - sigma'_nu odd, n odd: zero.
pub fn delta_character(
    field: &Arc<CycloField>,
    n: u32,
    nu: &Partition,
) -> Result<Cyclo, String> {
    assert_eq!(nu.n(), n);
    let l = nu.len() as u32;
    let odd_word = (n - l) % 2 == 1;
    if !odd_word {
        if !nu.all_parts_odd() {
            return Ok(Cyclo::zero(field));
        }
        let sign = if ((n - l) / 2) % 2 == 0 { 1 } else { -1 };
        let mag = BigInt::from(sign) << ((l - 1) / 2) as usize;
        return Ok(Cyclo::from_rational(
            field,
            BigRational::from_integer(mag),
        ));
    }
    if n % 2 == 1 {
        return Ok(Cyclo::zero(field));
    }
    if l != 1 {
        return Ok(Cyclo::zero(field));
    }
    let half = n / 2;
    let root = Cyclo::sqrt_nat(field, half as u64).ok_or_else(|| {
        format!(
            "sqrt({}) is not in the cyclotomic field of order {}",
            half,
            field.order()
        )
    })?;
    let i_pow = Cyclo::i_unit(field).pow((half as i64) - 1);
    Ok(i_pow.mul(&root))
}

// ---------------------------------------------------------------------------
// multipartitions

/// Which dual the colors run over: the full cyclic dual (m characters) or
/// the even half (m/2 characters, m even).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ColorKind {
    Full,
    Half,
}

impl ColorKind {
    pub fn json_name(self) -> &'static str {
        match self {
            ColorKind::Full => "T",
            ColorKind::Half => "T0",
        }
    }

    /// Number of components for the given m.
    pub fn components(self, m: u32) -> usize {
        match self {
            ColorKind::Full => m as usize,
            ColorKind::Half => {
                assert!(m % 2 == 0, "half dual needs even m");
                (m / 2) as usize
            }
        }
    }
}

/// A tuple of partitions indexed by colors in a fixed order (exponent
/// 0, 1, 2, ... of the base character).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiPartition {
    pub kind: ColorKind,
    pub comps: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(kind: ColorKind, comps: Vec<Partition>) -> Self {
        MultiPartition { kind, comps }
    }

    pub fn n(&self) -> u32 {
        self.comps.iter().map(|p| p.n()).sum()
    }

    /// Size vector (n_zeta) in color order.
    pub fn nu(&self) -> Vec<u32> {
        self.comps.iter().map(|p| p.n()).collect()
    }

    /// Componentwise conjugate.
    pub fn transpose(&self) -> MultiPartition {
        MultiPartition {
            kind: self.kind,
            comps: self.comps.iter().map(|p| p.conjugate()).collect(),
        }
    }

    /// All components strict.
    pub fn is_shifted(&self) -> bool {
        self.comps.iter().all(|p| p.is_strict())
    }

    /// Number of components with eps = 1 (shifted tuples only).
    pub fn s_stat(&self) -> u32 {
        self.comps.iter().map(|p| p.eps() as u32).sum()
    }

    /// n minus the total number of parts.
    pub fn d_stat(&self) -> u32 {
        self.n() - self.comps.iter().map(|p| p.len() as u32).sum::<u32>()
    }

    pub fn to_json(&self) -> String {
        let inner: Vec<String> = self.comps.iter().map(|p| p.to_json()).collect();
        format!(
            "{{\"K\":\"{}\",\"parts\":[{}]}}",
            self.kind.json_name(),
            inner.join(",")
        )
    }
}

impl core::fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let inner: Vec<String> = self.comps.iter().map(|p| p.to_json()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// All k-tuples of partitions with total size n. Order: size vectors in the
/// order of [`compositions`], then per-component partitions in the order of
/// [`partitions`], leftmost component most significant.
pub fn multipartitions(k: usize, n: u32) -> Vec<Vec<Partition>> {
    tuples_of_partitions(k, n, &partitions)
}

/// All k-tuples of strict partitions with total size n, same order.
pub fn shifted_multipartitions(k: usize, n: u32) -> Vec<Vec<Partition>> {
    tuples_of_partitions(k, n, &strict_partitions)
}

fn tuples_of_partitions(
    k: usize,
    n: u32,
    per: &dyn Fn(u32) -> Vec<Partition>,
) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for sizes in compositions(k, n) {
        let menus: Vec<Vec<Partition>> = sizes.iter().map(|&s| per(s)).collect();
        let mut cur: Vec<Partition> = Vec::with_capacity(k);
        fn rec(
            menus: &[Vec<Partition>],
            cur: &mut Vec<Partition>,
            out: &mut Vec<Vec<Partition>>,
        ) {
            if cur.len() == menus.len() {
                out.push(cur.clone());
                return;
            }
            for p in &menus[cur.len()] {
                cur.push(p.clone());
                rec(menus, cur, out);
                cur.pop();
            }
        }
        rec(&menus, &mut cur, &mut out);
    }
    out
}

/// Dimension of the projective irreducible of the product of symmetric
/// groups attached to a shifted tuple: 2^{floor(s/2)} prod spin_dim.
pub fn tau_tuple_dim(lam: &MultiPartition) -> BigUint {
    assert!(lam.is_shifted());
    let mut d = BigUint::one() << (lam.s_stat() / 2) as usize;
    for p in &lam.comps {
        d *= spin_dim(p);
    }
    d
}

/// Label for a projective irreducible with central sign on the main cover:
/// a shifted tuple, plus a sign when s is odd (the associate pair).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SpinLabel {
    pub lam: MultiPartition,
    /// None when s is even; Some(+1)/Some(-1) for the associate pair.
    pub mu: Option<i8>,
}

impl SpinLabel {
    pub fn to_json(&self) -> String {
        match self.mu {
            None => format!("{{\"lam\":{}}}", self.lam.to_json()),
            Some(s) => format!("{{\"lam\":{},\"mu\":{}}}", self.lam.to_json(), s),
        }
    }
}

/// All spin labels over k colors with total size n: shifted tuples, the
/// s-odd ones doubled with mu = +1, -1.
pub fn spin_labels(kind: ColorKind, k: usize, n: u32) -> Vec<SpinLabel> {
    let mut out = Vec::new();
    for comps in shifted_multipartitions(k, n) {
        let lam = MultiPartition::new(kind, comps);
        if lam.s_stat() % 2 == 0 {
            out.push(SpinLabel { lam, mu: None });
        } else {
            out.push(SpinLabel {
                lam: lam.clone(),
                mu: Some(1),
            });
            out.push(SpinLabel { lam, mu: Some(-1) });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// color vectors and their twisted classes

/// sort(gamma + m/2 mod m), the partner of a weakly increasing color vector.
pub fn gamma_psi0(gamma: &[u32], m: u32) -> Vec<u32> {
    let m0 = m / 2;
    let mut v: Vec<u32> = gamma.iter().map(|&g| (g + m0) % m).collect();
    v.sort_unstable();
    v
}

/// The rotated tuple (gamma_{p+1..n}, gamma_{1..p}) for weakly increasing
/// gamma, where p counts entries below m/2. Equals psi0 + m/2 entrywise.
pub fn gamma_psi1(gamma: &[u32], m: u32) -> Vec<u32> {
    debug_assert!(gamma.windows(2).all(|w| w[0] <= w[1]));
    let m0 = m / 2;
    let p = gamma.iter().filter(|&&g| g < m0).count();
    let mut v: Vec<u32> = gamma[p..].to_vec();
    v.extend_from_slice(&gamma[..p]);
    v
}

/// (p, q): entries below / at-or-above m/2, for weakly increasing gamma.
pub fn gamma_pq(gamma: &[u32], m: u32) -> (usize, usize) {
    let m0 = m / 2;
    let p = gamma.iter().filter(|&&g| g < m0).count();
    (p, gamma.len() - p)
}

/// Orbit of a color vector under the twisted permutation action
/// (even sigma acts by position permutation, odd sigma also adds m/2 to
/// every entry). Breadth-first closure under the adjacent generators.
pub fn gamma_orbit(gamma: &[u32], m: u32) -> BTreeSet<Vec<u32>> {
    assert!(m % 2 == 0, "twisted color action needs even m");
    assert!(gamma.iter().all(|&g| g < m));
    let m0 = m / 2;
    let n = gamma.len();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue: Vec<Vec<u32>> = vec![gamma.to_vec()];
    seen.insert(gamma.to_vec());
    while let Some(x) = queue.pop() {
        for i in 0..n.saturating_sub(1) {
            let mut y: Vec<u32> = x.iter().map(|&g| (g + m0) % m).collect();
            y.swap(i, i + 1);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

/// How a canonical color vector sits relative to its shifted partner.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GammaStratum {
    /// n odd, some repeated entry.
    OddRepeat,
    /// n odd, all entries distinct.
    OddDistinct,
    /// n even, repeated entry, rep strictly below its partner.
    EvenRepeatPrec,
    /// n even, repeated entry, rep equal to its partner.
    EvenRepeatEq,
    /// n even, distinct entries, partner in a different class (pq even).
    EvenDistinctPlain,
    /// n even, distinct entries, pq odd: the sorted member of the pair.
    EvenDistinctPairFirst,
    /// n even, distinct entries, pq odd: the class with no sorted member.
    EvenDistinctPairSecond,
}

impl GammaStratum {
    pub fn name(self) -> &'static str {
        match self {
            GammaStratum::OddRepeat => "rep",
            GammaStratum::OddDistinct => "distinct",
            GammaStratum::EvenRepeatPrec => "rep-prec",
            GammaStratum::EvenRepeatEq => "rep-eq",
            GammaStratum::EvenDistinctPlain => "distinct-plain",
            GammaStratum::EvenDistinctPairFirst => "pair-first",
            GammaStratum::EvenDistinctPairSecond => "pair-second",
        }
    }
}

/// Canonical data of the twisted class of a color vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaClass {
    /// Smallest sorted member of the orbit, or the smallest member outright
    /// when the orbit contains no sorted vector.
    pub rep: Vec<u32>,
    pub stratum: GammaStratum,
    /// Order of the image in S_n of the twisted stabilizer of `rep`.
    pub stab_image_order: u64,
    /// Whether the twisted stabilizer contains odd permutations.
    pub stab_has_odd: bool,
}

/// Canonicalize a color vector under the twisted action.
pub fn gamma_canonicalize(gamma: &[u32], m: u32) -> GammaClass {
    let orbit = gamma_orbit(gamma, m);
    let n = gamma.len();
    let sorted_members: Vec<&Vec<u32>> = orbit
        .iter()
        .filter(|v| v.windows(2).all(|w| w[0] <= w[1]))
        .collect();
    let (rep, has_sorted) = match sorted_members.first() {
        Some(v) => ((*v).clone(), true),
        None => (orbit.iter().next().expect("orbit nonempty").clone(), false),
    };

    // stabilizer of rep: |S_n| / |orbit|, odd part by direct test
    let stab_image_order = (factorial(n as u32)
        / BigUint::from(orbit.len() as u64))
    .try_into()
    .unwrap_or(u64::MAX);
    let stab_has_odd = stabilizer_has_odd(&rep, m);

    let has_repeat = rep.windows(2).any(|w| w[0] == w[1]);
    let stratum = if n % 2 == 1 {
        if has_repeat {
            GammaStratum::OddRepeat
        } else {
            GammaStratum::OddDistinct
        }
    } else if has_repeat {
        if rep == gamma_psi0(&rep, m) {
            GammaStratum::EvenRepeatEq
        } else {
            GammaStratum::EvenRepeatPrec
        }
    } else if !has_sorted {
        GammaStratum::EvenDistinctPairSecond
    } else {
        let (p, q) = gamma_pq(&rep, m);
        if (p * q) % 2 == 1 {
            GammaStratum::EvenDistinctPairFirst
        } else {
            GammaStratum::EvenDistinctPlain
        }
    };
    GammaClass {
        rep,
        stratum,
        stab_image_order,
        stab_has_odd,
    }
}

/// Does some odd permutation sigma satisfy sigma(gamma) = gamma + m/2?
fn stabilizer_has_odd(gamma: &[u32], m: u32) -> bool {
    let m0 = m / 2;
    let shifted: Vec<u32> = gamma.iter().map(|&g| (g + m0) % m).collect();
    let mut a = gamma.to_vec();
    let mut b = shifted.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    if gamma.windows(2).any(|w| w[0] == w[1]) {
        // adjust parity with a transposition of equal positions
        return true;
    }
    // distinct entries: the permutation with sigma(gamma) = shifted is unique;
    // sigma^{-1}(j) = position of shifted[j] in gamma
    let n = gamma.len();
    let mut pos: BTreeMap<u32, usize> = BTreeMap::new();
    for (i, &g) in gamma.iter().enumerate() {
        pos.insert(g, i);
    }
    let mut sigma_inv: Vec<usize> = Vec::with_capacity(n);
    for &s in &shifted {
        sigma_inv.push(pos[&s]);
    }
    permutation_parity(&sigma_inv) == 1
}

/// Parity of a permutation given in one-line image form (0-based): 0 even, 1 odd.
pub fn permutation_parity(perm: &[usize]) -> u8 {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parity = 0u8;
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        parity ^= ((len - 1) % 2) as u8;
    }
    parity
}
