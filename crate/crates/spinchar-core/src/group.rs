//! Exact arithmetic in the wreath product G(m,1,n) = (Z_m)^n x| S_n and in its
//! representation group, a central extension by commuting involutions z1, z2, z3
//! (for odd m the multiplier degenerates and z2 = z3 = e).
//!
//! Generators: colour generators h_1..h_n of order m (the hatted basis), lifts
//! r_1..r_{n-1} of the adjacent transpositions, and the central z's, subject to
//!
//! ```text
//! r_i^2 = e,   r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1},   r_i r_j = z1 r_j r_i  (|i-j| >= 2),
//! h_j h_k = z2 h_k h_j (j != k),   h_j^m = e,   w h_j w^-1 = z3^{L(w)} h_{sigma(j)},
//! ```
//!
//! where the conjugation rule holds for every j, moved or fixed. Every element is
//! stored in the bijective normal form
//!
//! ```text
//! z1^a z2^b z3^c . h_1^{v_1} ... h_n^{v_n} . w(sigma),
//! ```
//!
//! with w(sigma) the canonical lift of sigma: the product of r_i along the reduced
//! word obtained by repeatedly resolving the leftmost descent (Lehmer ordering).
//! A z1-offset of any other word is folded into the central exponent, so the
//! serialized `sign` field is always 0.
//!
//! The 2-cocycle of the symmetric-group cover is computed exactly in the integral
//! Clifford algebra with e_j^2 = 1, lifting s_i to the vector e_i - e_{i+1}.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;
use core::fmt::Write as _;

use crate::combin::permutation_parity;

/// Default ceiling for exhaustive enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

fn is_permutation(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

fn perm_inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Composition acting on the right factor first: (a . b)(i) = a(b(i)).
fn perm_compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// Reduced word for sigma, letters in product order (left to right), obtained by
/// repeatedly clearing the leftmost descent. Deterministic; length = #inversions.
pub fn canonical_word(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut tau = perm.to_vec();
    let mut w = Vec::new();
    loop {
        let mut p = None;
        for i in 0..n.saturating_sub(1) {
            if tau[i] > tau[i + 1] {
                p = Some(i);
                break;
            }
        }
        match p {
            Some(i) => {
                w.push(i);
                tau.swap(i, i + 1);
            }
            None => break,
        }
    }
    w.reverse();
    w
}

// ---------------------------------------------------------------------------
// Integral Clifford algebra, used only for the permutation 2-cocycle.
// ---------------------------------------------------------------------------

/// Sparse element of the Clifford algebra with e_j^2 = +1, monomials as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Clifford {
    terms: BTreeMap<u64, i128>,
}

/// Parity of moving monomial b through monomial a (e's anticommute, squares +1).
fn clifford_swap_parity(a: u64, b: u64) -> u32 {
    let mut parity = 0u32;
    let mut bb = b;
    while bb != 0 {
        let bit = bb.trailing_zeros();
        parity ^= (a >> (bit + 1)).count_ones() & 1;
        bb &= bb - 1;
    }
    parity
}

impl Clifford {
    fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0u64, 1i128);
        Clifford { terms }
    }

    /// The vector e_i - e_{i+1}, the integral lift of the transposition s_i.
    fn vector(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(1u64 << i, 1i128);
        terms.insert(1u64 << (i + 1), -1i128);
        Clifford { terms }
    }

    fn mul(&self, other: &Clifford) -> Clifford {
        let mut terms: BTreeMap<u64, i128> = BTreeMap::new();
        for (&ma, &ca) in &self.terms {
            for (&mb, &cb) in &other.terms {
                let sign = if clifford_swap_parity(ma, mb) & 1 == 1 { -1 } else { 1 };
                let entry = terms.entry(ma ^ mb).or_insert(0);
                *entry += sign * ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0);
        Clifford { terms }
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// Element of the representation group in normal form.
///
/// `colors[j]` is the exponent of the j-th colour generator in the ordered product
/// h_1^{v_1}...h_n^{v_n}; `perm[i]` is the 0-based image of position i; the `z`
/// exponents are mod 2 and the z1-offset of the word is already folded in, so the
/// tuple (z, colors, perm) is a bijective normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpinElement {
    pub m: u32,
    pub n: usize,
    pub z: [u8; 3],
    pub colors: Vec<u32>,
    pub perm: Vec<usize>,
}

impl SpinElement {
    pub fn identity(m: u32, n: usize) -> Self {
        SpinElement {
            m,
            n,
            z: [0; 3],
            colors: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    /// Validating constructor; `z` entries are parities, colours are mod-m exponents.
    pub fn from_parts(
        m: u32,
        n: usize,
        z: [u8; 3],
        colors: Vec<u32>,
        perm: Vec<usize>,
    ) -> Result<Self, String> {
        if m == 0 || n == 0 {
            return Err(String::from("m and n must be positive"));
        }
        if colors.len() != n || perm.len() != n {
            return Err(String::from("colors and perm must have length n"));
        }
        if !is_permutation(&perm) {
            return Err(String::from("perm is not a permutation"));
        }
        if colors.iter().any(|&v| v >= m) {
            return Err(String::from("colour exponent out of range"));
        }
        if z.iter().any(|&a| a > 1) {
            return Err(String::from("z exponents must be 0 or 1"));
        }
        if m % 2 == 1 && (z[1] != 0 || z[2] != 0) {
            return Err(String::from("z2, z3 are trivial for odd m"));
        }
        Ok(SpinElement { m, n, z, colors, perm })
    }

    /// Colour generator h_{j+1} to the power e (0-based position j).
    pub fn eta_hat(m: u32, n: usize, j: usize, e: u32) -> Self {
        let mut g = Self::identity(m, n);
        g.colors[j] = e % m;
        g
    }

    /// Canonical lift r_{i+1} of the adjacent transposition (0-based i).
    pub fn r_gen(m: u32, n: usize, i: usize) -> Self {
        let mut g = Self::identity(m, n);
        g.perm.swap(i, i + 1);
        g
    }

    /// Central element z1^a z2^b z3^c (b, c forced to 0 for odd m).
    pub fn central(m: u32, n: usize, z: [u8; 3]) -> Self {
        let mut g = Self::identity(m, n);
        g.z = if m % 2 == 0 {
            [z[0] & 1, z[1] & 1, z[2] & 1]
        } else {
            [z[0] & 1, 0, 0]
        };
        g
    }

    /// This element times the given central factor.
    pub fn mul_central(&self, z: [u8; 3]) -> Self {
        let mut g = self.clone();
        g.z[0] ^= z[0] & 1;
        if self.m % 2 == 0 {
            g.z[1] ^= z[1] & 1;
            g.z[2] ^= z[2] & 1;
        }
        g
    }

    /// Underlying permutation parity L mod 2.
    pub fn l_parity(&self) -> u8 {
        permutation_parity(&self.perm)
    }

    /// Sum of colour exponents (representatives 0..m-1).
    pub fn ord_sum(&self) -> u64 {
        self.colors.iter().map(|&v| v as u64).sum()
    }

    /// Positions moved by the permutation or carrying a colour.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.perm[i] != i || self.colors[i] != 0)
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = String::new();
        write!(
            s,
            "{{\"m\":{},\"n\":{},\"z\":[{},{},{}],\"colors\":[",
            self.m, self.n, self.z[0], self.z[1], self.z[2]
        )
        .unwrap();
        for (i, v) in self.colors.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{}", v).unwrap();
        }
        s.push_str("],\"perm\":[");
        for (i, p) in self.perm.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{}", p + 1).unwrap();
        }
        s.push_str("],\"sign\":0}");
        s
    }
}

impl fmt::Display for SpinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["z1", "z2", "z3"];
        let mut wrote = false;
        for (i, &a) in self.z.iter().enumerate() {
            if a == 1 {
                if wrote {
                    f.write_str(" ")?;
                }
                f.write_str(names[i])?;
                wrote = true;
            }
        }
        for (j, &v) in self.colors.iter().enumerate() {
            if v != 0 {
                if wrote {
                    f.write_str(" ")?;
                }
                if v == 1 {
                    write!(f, "h{}", j + 1)?;
                } else {
                    write!(f, "h{}^{}", j + 1, v)?;
                }
                wrote = true;
            }
        }
        let mut seen = vec![false; self.n];
        for i in 0..self.n {
            if seen[i] || self.perm[i] == i {
                continue;
            }
            let mut cyc = vec![i];
            seen[i] = true;
            let mut j = self.perm[i];
            while j != i {
                seen[j] = true;
                cyc.push(j);
                j = self.perm[j];
            }
            if wrote {
                f.write_str(" ")?;
            }
            f.write_str("(")?;
            for (k, &p) in cyc.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("e")?;
        }
        Ok(())
    }
}

/// Element of the base group G(m,1,n), i.e. the cover with the centre forgotten.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BaseElement {
    pub m: u32,
    pub n: usize,
    pub colors: Vec<u32>,
    pub perm: Vec<usize>,
}

impl BaseElement {
    pub fn identity(m: u32, n: usize) -> Self {
        BaseElement {
            m,
            n,
            colors: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    pub fn mul(&self, other: &BaseElement) -> BaseElement {
        assert_eq!((self.m, self.n), (other.m, other.n));
        let n = self.n;
        let mut colors = self.colors.clone();
        for j in 0..n {
            colors[self.perm[j]] = (colors[self.perm[j]] + other.colors[j]) % self.m;
        }
        BaseElement {
            m: self.m,
            n,
            colors,
            perm: perm_compose(&self.perm, &other.perm),
        }
    }

    pub fn inv(&self) -> BaseElement {
        let colors = (0..self.n)
            .map(|i| (self.m - self.colors[self.perm[i]]) % self.m)
            .collect();
        BaseElement {
            m: self.m,
            n: self.n,
            colors,
            perm: perm_inverse(&self.perm),
        }
    }

    pub fn conj(&self, g: &BaseElement) -> BaseElement {
        self.mul(g).mul(&self.inv())
    }
}

/// Projection forgetting the centre (and the word sign).
pub fn phi(g: &SpinElement) -> BaseElement {
    BaseElement {
        m: g.m,
        n: g.n,
        colors: g.colors.clone(),
        perm: g.perm.clone(),
    }
}

// ---------------------------------------------------------------------------
// The cover context: cached canonical lifts and all group operations.
// ---------------------------------------------------------------------------

/// Arithmetic context for one (m,n); caches the Clifford lifts of permutations.
pub struct Cover {
    pub m: u32,
    pub n: usize,
    lifts: RefCell<BTreeMap<Vec<usize>, Clifford>>,
}

impl Cover {
    pub fn new(m: u32, n: usize) -> Self {
        assert!(m >= 1 && n >= 1 && n <= 60, "supported range: m >= 1, 1 <= n <= 60");
        Cover {
            m,
            n,
            lifts: RefCell::new(BTreeMap::new()),
        }
    }

    fn ensure_lift(&self, perm: &[usize]) {
        if self.lifts.borrow().contains_key(perm) {
            return;
        }
        let mut c = Clifford::one();
        for i in canonical_word(perm) {
            c = c.mul(&Clifford::vector(i));
        }
        self.lifts.borrow_mut().insert(perm.to_vec(), c);
    }

    /// z1-exponent c with lift(s) lift(t) = z1^c lift(st) under the canonical lift.
    pub fn cocycle_sign(&self, s: &[usize], t: &[usize]) -> u8 {
        let st = perm_compose(s, t);
        self.ensure_lift(s);
        self.ensure_lift(t);
        self.ensure_lift(&st);
        let map = self.lifts.borrow();
        let a = map.get(s).unwrap();
        let b = map.get(t).unwrap();
        let c = map.get(st.as_slice()).unwrap();
        let p = a.mul(b);
        let (mask, cc) = c.terms.iter().next().expect("lift is nonzero");
        let pc = *p.terms.get(mask).expect("product is proportional to the lift");
        debug_assert!(pc != 0);
        u8::from((pc < 0) != (*cc < 0))
    }

    /// Exact proportionality check lift(s)lift(t) = +-2^k lift(st); test support.
    #[cfg(test)]
    fn cocycle_proportional(&self, s: &[usize], t: &[usize]) -> bool {
        let st = perm_compose(s, t);
        self.ensure_lift(s);
        self.ensure_lift(t);
        self.ensure_lift(&st);
        let map = self.lifts.borrow();
        let p = map.get(s).unwrap().mul(map.get(t).unwrap());
        let c = map.get(st.as_slice()).unwrap();
        if p.terms.len() != c.terms.len() {
            return false;
        }
        let (m0, c0) = c.terms.iter().next().unwrap();
        let p0 = match p.terms.get(m0) {
            Some(v) => *v,
            None => return false,
        };
        if p0 % c0 != 0 {
            return false;
        }
        let ratio = p0 / c0;
        if ratio == 0 || (ratio.abs() & (ratio.abs() - 1)) != 0 {
            return false;
        }
        c.terms
            .iter()
            .all(|(mk, cv)| p.terms.get(mk) == Some(&(cv * ratio)))
    }

    pub fn mul(&self, x: &SpinElement, y: &SpinElement) -> SpinElement {
        assert_eq!((x.m, x.n), (self.m, self.n));
        assert_eq!((y.m, y.n), (self.m, self.n));
        let n = self.n;
        let m_even = self.m % 2 == 0;
        let mut z = [x.z[0] ^ y.z[0], x.z[1] ^ y.z[1], x.z[2] ^ y.z[2]];

        // Move y's colours through x's lift: each h_j^{v} picks up z3^{L(x) v} and
        // lands at position sigma_x(j); sorting the factors back into position
        // order costs z2 per crossing pair of odd exponents.
        let mut w = vec![0u32; n];
        for j in 0..n {
            w[x.perm[j]] = y.colors[j];
        }
        if m_even {
            let ord_y = y.colors.iter().map(|&v| v as u64).sum::<u64>();
            let lx = permutation_parity(&x.perm) as u64;
            z[2] ^= ((lx * ord_y) & 1) as u8;
            let mut inv_bit = 0u8;
            for j in 0..n {
                if y.colors[j] & 1 == 0 {
                    continue;
                }
                for k in (j + 1)..n {
                    if x.perm[j] > x.perm[k] {
                        inv_bit ^= (y.colors[k] & 1) as u8;
                    }
                }
            }
            // Merge with x's colours: h_j^{w_j} moves left past x's factors above j.
            let mut cross_bit = 0u8;
            let mut suffix = 0u64;
            for j in (0..n).rev() {
                cross_bit ^= ((w[j] as u64 & 1) & (suffix & 1)) as u8;
                suffix += x.colors[j] as u64;
            }
            z[1] ^= inv_bit ^ cross_bit;
        }
        let colors: Vec<u32> = (0..n).map(|i| (x.colors[i] + w[i]) % self.m).collect();
        z[0] ^= self.cocycle_sign(&x.perm, &y.perm);
        if !m_even {
            z[1] = 0;
            z[2] = 0;
        }
        SpinElement {
            m: self.m,
            n,
            z,
            colors,
            perm: perm_compose(&x.perm, &y.perm),
        }
    }

    pub fn inv(&self, x: &SpinElement) -> SpinElement {
        let n = self.n;
        let pinv = perm_inverse(&x.perm);
        let mut z = x.z;
        z[0] ^= self.cocycle_sign(&x.perm, &pinv);
        if self.m % 2 == 0 {
            // reversing the colour word costs z2 per pair of odd exponents
            let mut pair_bit = 0u8;
            let mut suffix = 0u64;
            for j in (0..n).rev() {
                pair_bit ^= ((x.colors[j] as u64 & 1) & (suffix & 1)) as u8;
                suffix += x.colors[j] as u64;
            }
            z[1] ^= pair_bit;
        }
        let head = SpinElement {
            m: self.m,
            n,
            z,
            colors: vec![0; n],
            perm: pinv,
        };
        let mut tail = SpinElement::identity(self.m, n);
        for j in 0..n {
            tail.colors[j] = (self.m - x.colors[j] % self.m) % self.m;
        }
        self.mul(&head, &tail)
    }

    /// h g h^{-1}.
    pub fn conj(&self, h: &SpinElement, g: &SpinElement) -> SpinElement {
        self.mul(&self.mul(h, g), &self.inv(h))
    }

    pub fn pow(&self, x: &SpinElement, k: u64) -> SpinElement {
        let mut acc = SpinElement::identity(self.m, self.n);
        let mut base = x.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Lift of the transposition (j k) as the palindromic word
    /// (r_j ... r_{k-2}) r_{k-1} (r_{k-2} ... r_j), 0-based, j < k.
    pub fn transposition_lift(&self, j: usize, k: usize) -> SpinElement {
        assert!(j < k && k < self.n);
        let mut g = SpinElement::identity(self.m, self.n);
        for i in j..k - 1 {
            g = self.mul(&g, &SpinElement::r_gen(self.m, self.n, i));
        }
        g = self.mul(&g, &SpinElement::r_gen(self.m, self.n, k - 1));
        for i in (j..k - 1).rev() {
            g = self.mul(&g, &SpinElement::r_gen(self.m, self.n, i));
        }
        g
    }
}

// ---------------------------------------------------------------------------
// Standard decomposition and support conditions.
// ---------------------------------------------------------------------------

/// One nontrivial cycle of the permutation with its colour data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBlock {
    /// Orbit in cycle order, starting at its minimal position.
    pub cycle: Vec<usize>,
    /// Sum of colour exponents over the orbit, mod m (exponent of the cycle product).
    pub ord: u32,
}

impl CycleBlock {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Length parity L of the cycle.
    pub fn l_parity(&self) -> u8 {
        ((self.cycle.len() - 1) % 2) as u8
    }
}

/// In-place decomposition into coloured fixed points and coloured cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub z: [u8; 3],
    /// Coloured fixed points (position, exponent), increasing position.
    pub singles: Vec<(usize, u32)>,
    /// Nontrivial cycles, by increasing minimal position.
    pub blocks: Vec<CycleBlock>,
}

impl Decomposition {
    /// Parity of the total colour exponent (representatives 0..m-1).
    pub fn ord_parity(&self) -> u8 {
        let s: u64 = self.singles.iter().map(|&(_, a)| a as u64).sum::<u64>()
            + self.blocks.iter().map(|b| b.ord as u64).sum::<u64>();
        (s & 1) as u8
    }

    /// Parity of the total permutation length.
    pub fn l_parity(&self) -> u8 {
        (self.blocks.iter().map(|b| b.len() - 1).sum::<usize>() % 2) as u8
    }

    pub fn supp_size(&self) -> usize {
        self.singles.len() + self.blocks.iter().map(|b| b.len()).sum::<usize>()
    }
}

/// Standard lift of the permutation with cycle type `parts` (cycles filling
/// consecutive intervals, largest part first), built by multiplying the
/// generator lifts r_a r_{a+1} ... r_{b-1} block by block.  The result can
/// differ from the canonical lift of the same permutation by a central sign,
/// so characters of lifted classes must be evaluated at exactly this element.
pub fn sigma_nu(cover: &Cover, parts: &[u32]) -> SpinElement {
    let total: u32 = parts.iter().sum();
    assert!(
        (total as usize) <= cover.n,
        "cycle type of size {} does not fit in n = {}",
        total,
        cover.n
    );
    let mut acc = SpinElement::identity(cover.m, cover.n);
    let mut start = 0usize;
    for &p in parts {
        assert!(p >= 1, "cycle lengths must be positive");
        for i in start..start + p as usize - 1 {
            acc = cover.mul(&acc, &SpinElement::r_gen(cover.m, cover.n, i));
        }
        start += p as usize;
    }
    acc
}

pub fn standard_decomposition(g: &SpinElement) -> Decomposition {
    let n = g.n;
    let mut singles = Vec::new();
    let mut blocks = Vec::new();
    let mut seen = vec![false; n];
    for i in 0..n {
        if seen[i] {
            continue;
        }
        if g.perm[i] == i {
            seen[i] = true;
            if g.colors[i] != 0 {
                singles.push((i, g.colors[i]));
            }
            continue;
        }
        let mut cyc = vec![i];
        seen[i] = true;
        let mut j = g.perm[i];
        let mut ord = g.colors[i] as u64;
        while j != i {
            seen[j] = true;
            cyc.push(j);
            ord += g.colors[j] as u64;
            j = g.perm[j];
        }
        blocks.push(CycleBlock {
            cycle: cyc,
            ord: (ord % g.m as u64) as u32,
        });
    }
    Decomposition {
        z: g.z,
        singles,
        blocks,
    }
}

/// Support-condition tags for the character theory of each spin type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionTag {
    Odd,
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    Str,
    I00,
    I11,
    II00,
    II11,
    Mho11,
}

impl ConditionTag {
    pub const ALL: [ConditionTag; 14] = [
        ConditionTag::Odd,
        ConditionTag::I,
        ConditionTag::II,
        ConditionTag::III,
        ConditionTag::IV,
        ConditionTag::V,
        ConditionTag::VI,
        ConditionTag::VII,
        ConditionTag::Str,
        ConditionTag::I00,
        ConditionTag::I11,
        ConditionTag::II00,
        ConditionTag::II11,
        ConditionTag::Mho11,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ConditionTag::Odd => "odd",
            ConditionTag::I => "I",
            ConditionTag::II => "II",
            ConditionTag::III => "III",
            ConditionTag::IV => "IV",
            ConditionTag::V => "V",
            ConditionTag::VI => "VI",
            ConditionTag::VII => "VII",
            ConditionTag::Str => "str",
            ConditionTag::I00 => "I-00",
            ConditionTag::I11 => "I-11",
            ConditionTag::II00 => "II-00",
            ConditionTag::II11 => "II-11",
            ConditionTag::Mho11 => "mho-11",
        }
    }

    pub fn parse(s: &str) -> Option<ConditionTag> {
        match s {
            "odd" => Some(ConditionTag::Odd),
            "I" => Some(ConditionTag::I),
            "II" => Some(ConditionTag::II),
            "III" => Some(ConditionTag::III),
            "IV" => Some(ConditionTag::IV),
            "V" => Some(ConditionTag::V),
            "VI" => Some(ConditionTag::VI),
            "VII" => Some(ConditionTag::VII),
            "str" => Some(ConditionTag::Str),
            "I-00" => Some(ConditionTag::I00),
            "I-11" => Some(ConditionTag::I11),
            "II-00" => Some(ConditionTag::II00),
            "II-11" => Some(ConditionTag::II11),
            "mho-11" | "\u{2127}-11" => Some(ConditionTag::Mho11),
            _ => None,
        }
    }
}

/// Evaluate a support condition on a decomposition (n is the ambient degree).
pub fn check_condition(dec: &Decomposition, n: usize, tag: ConditionTag) -> bool {
    let singles_even = dec.singles.iter().all(|&(_, a)| a % 2 == 0);
    let singles_odd = dec.singles.iter().all(|&(_, a)| a % 2 == 1);
    let blocks_l_even = dec.blocks.iter().all(|b| b.l_parity() == 0);
    let blocks_ord_even = dec.blocks.iter().all(|b| b.ord % 2 == 0);
    let blocks_ord_odd = dec.blocks.iter().all(|b| b.ord % 2 == 1);
    let blocks_mixed_even = dec
        .blocks
        .iter()
        .all(|b| (b.ord as usize + b.len() - 1) % 2 == 0);
    let full = dec.supp_size() == n;
    let rs_parity = ((dec.singles.len() + dec.blocks.len()) % 2) as u8;
    match tag {
        ConditionTag::Odd | ConditionTag::IV => blocks_l_even,
        ConditionTag::I => singles_even && blocks_mixed_even,
        ConditionTag::II | ConditionTag::II00 => {
            dec.ord_parity() == 0 && dec.l_parity() == 0 && singles_even && blocks_mixed_even
        }
        ConditionTag::III => dec.ord_parity() == 0 && blocks_l_even,
        ConditionTag::V | ConditionTag::VI | ConditionTag::Str => {
            singles_even && blocks_ord_even && blocks_l_even
        }
        ConditionTag::VII => dec.ord_parity() == 0 && dec.l_parity() == 0,
        ConditionTag::I00 => {
            (dec.ord_parity() + dec.l_parity()) % 2 == 0 && singles_even && blocks_mixed_even
        }
        ConditionTag::I11 => {
            full && n % 2 == 1
                && (dec.ord_parity() + dec.l_parity()) % 2 == 1
                && singles_odd
                && blocks_ord_odd
        }
        ConditionTag::II11 => {
            full && n % 2 == 0
                && dec.ord_parity() == 1
                && dec.l_parity() == 1
                && rs_parity == 1
                && singles_odd
                && blocks_ord_odd
        }
        ConditionTag::Mho11 => {
            full && n % 2 == 1
                && dec.ord_parity() == 1
                && dec.l_parity() == 0
                && singles_odd
                && blocks_ord_odd
        }
    }
}

pub fn condition_check(g: &SpinElement, tag: ConditionTag) -> bool {
    check_condition(&standard_decomposition(g), g.n, tag)
}

/// Sign of sorting the concatenated supports (singles, then blocks in listed
/// order, positions increasing inside each block) into 1..n. Defined only on
/// full support; Y-monomials anticommute pairwise, so this is the sign relating
/// the factored monomial product to the straight one.
pub fn epsilon_mho(dec: &Decomposition, n: usize) -> Option<i8> {
    if dec.supp_size() != n {
        return None;
    }
    let mut seq: Vec<usize> = dec.singles.iter().map(|&(q, _)| q).collect();
    for b in &dec.blocks {
        let mut sorted = b.cycle.clone();
        sorted.sort_unstable();
        seq.extend(sorted);
    }
    if seq.len() != n {
        return None;
    }
    Some(if permutation_parity(&seq) == 0 { 1 } else { -1 })
}

// ---------------------------------------------------------------------------
// Conjugacy normalization.
// ---------------------------------------------------------------------------

/// Interval normal form: singles packed on the left (sorted by exponent), then
/// cycle blocks on consecutive intervals by increasing length, colours
/// concentrated on each interval's left end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub m: u32,
    pub n: usize,
    /// Exponents a_1..a_r of the singles at positions 1..r, weakly increasing.
    pub singles: Vec<u32>,
    /// Blocks (start, len, ord) with consecutive intervals, by (len, ord).
    pub blocks: Vec<(usize, usize, u32)>,
}

impl StandardForm {
    pub fn to_element(&self) -> SpinElement {
        let mut g = SpinElement::identity(self.m, self.n);
        for (i, &a) in self.singles.iter().enumerate() {
            g.colors[i] = a;
        }
        for &(s, l, ord) in &self.blocks {
            g.colors[s] = ord;
            for k in s..s + l - 1 {
                g.perm[k] = k + 1;
            }
            g.perm[s + l - 1] = s;
        }
        g
    }

    /// Cycle lengths by block order.
    pub fn block_lens(&self) -> Vec<usize> {
        self.blocks.iter().map(|&(_, l, _)| l).collect()
    }
}

/// Conjugate g into interval normal form, tracking the central factor exactly.
/// Returns (h, z, nf) with h g h^{-1} = z . nf as group elements.
pub fn normalize_conjugacy(cover: &Cover, g: &SpinElement) -> (SpinElement, [u8; 3], StandardForm) {
    let n = g.n;
    let dec = standard_decomposition(g);

    let mut singles = dec.singles.clone();
    singles.sort_by_key(|&(q, a)| (a, q));
    let mut blocks = dec.blocks.clone();
    blocks.sort_by_key(|b| (b.len(), b.ord, b.cycle[0]));

    // Relabelling: singles to the left, blocks to consecutive intervals.
    let mut target = vec![usize::MAX; n];
    let mut next = 0usize;
    for &(q, _) in &singles {
        target[q] = next;
        next += 1;
    }
    let mut layout = Vec::new();
    for b in &blocks {
        layout.push((next, b.len()));
        for (k, &p) in b.cycle.iter().enumerate() {
            target[p] = next + k;
        }
        next += b.len();
    }
    for t in target.iter_mut() {
        if *t == usize::MAX {
            *t = next;
            next += 1;
        }
    }
    let relabel = SpinElement::from_parts(g.m, n, [0; 3], vec![0; n], target).unwrap();
    let mut cur = cover.conj(&relabel, g);
    let mut h = relabel;

    // Concentrate each block's colour at its left end by colour conjugations:
    // conjugating by h_k^p adds p at k and removes p at sigma(k) = k+1.
    for &(s, l) in &layout {
        for k in (s..s + l - 1).rev() {
            let p = cur.colors[k + 1];
            if p != 0 {
                let step = SpinElement::eta_hat(g.m, n, k, p);
                cur = cover.conj(&step, &cur);
                h = cover.mul(&step, &h);
            }
        }
    }

    let z = cur.z;
    let nf = StandardForm {
        m: g.m,
        n,
        singles: singles.iter().map(|&(_, a)| a).collect(),
        blocks: layout
            .iter()
            .map(|&(s, l)| (s, l, cur.colors[s]))
            .collect(),
    };
    debug_assert_eq!(nf.to_element(), {
        let mut stripped = cur.clone();
        stripped.z = [0; 3];
        stripped
    });
    (h, z, nf)
}

// ---------------------------------------------------------------------------
// Enumeration, ranking, conjugacy classes.
// ---------------------------------------------------------------------------

/// Enumeration level: the base group or the full cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverLevel {
    Base,
    FullCover,
}

/// Number of central elements at the given level.
pub fn centre_size(m: u32, level: CoverLevel) -> u64 {
    match level {
        CoverLevel::Base => 1,
        CoverLevel::FullCover => {
            if m % 2 == 0 {
                8
            } else {
                2
            }
        }
    }
}

fn factorial_u64(n: usize) -> Option<u64> {
    let mut f: u64 = 1;
    for i in 2..=n as u64 {
        f = f.checked_mul(i)?;
    }
    Some(f)
}

/// |Z| . m^n . n! at the given level, or an error on overflow.
pub fn group_order(m: u32, n: usize, level: CoverLevel) -> Result<u64, String> {
    let mut size = centre_size(m, level);
    for _ in 0..n {
        size = size
            .checked_mul(m as u64)
            .ok_or_else(|| String::from("group order overflows u64"))?;
    }
    let f = factorial_u64(n).ok_or_else(|| String::from("group order overflows u64"))?;
    size.checked_mul(f)
        .ok_or_else(|| String::from("group order overflows u64"))
}

fn perm_rank(perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut r: u64 = 0;
    for i in 0..n {
        let c = (i + 1..n).filter(|&j| perm[j] < perm[i]).count() as u64;
        r = r * (n - i) as u64 + c;
    }
    r
}

fn perm_unrank(n: usize, mut r: u64) -> Vec<usize> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (r % base) as usize;
        r /= base;
    }
    let mut avail: Vec<usize> = (0..n).collect();
    digits.iter().map(|&d| avail.remove(d)).collect()
}

/// Dense index of an element, inverse of `unrank_element`.
pub fn rank_element(g: &SpinElement, level: CoverLevel) -> u64 {
    let zidx: u64 = match level {
        CoverLevel::Base => 0,
        CoverLevel::FullCover => {
            if g.m % 2 == 0 {
                g.z[0] as u64 + 2 * g.z[1] as u64 + 4 * g.z[2] as u64
            } else {
                g.z[0] as u64
            }
        }
    };
    let mut cidx: u64 = 0;
    for &v in g.colors.iter().rev() {
        cidx = cidx * g.m as u64 + v as u64;
    }
    let f = factorial_u64(g.n).expect("degree in range");
    let mut mp: u64 = 1;
    for _ in 0..g.n {
        mp *= g.m as u64;
    }
    (zidx * mp + cidx) * f + perm_rank(&g.perm)
}

pub fn unrank_element(m: u32, n: usize, level: CoverLevel, idx: u64) -> SpinElement {
    let f = factorial_u64(n).expect("degree in range");
    let pidx = idx % f;
    let mut rest = idx / f;
    let mut colors = vec![0u32; n];
    for c in colors.iter_mut() {
        *c = (rest % m as u64) as u32;
        rest /= m as u64;
    }
    let z = match level {
        CoverLevel::Base => [0; 3],
        CoverLevel::FullCover => {
            if m % 2 == 0 {
                [(rest & 1) as u8, ((rest >> 1) & 1) as u8, ((rest >> 2) & 1) as u8]
            } else {
                [(rest & 1) as u8, 0, 0]
            }
        }
    };
    SpinElement {
        m,
        n,
        z,
        colors,
        perm: perm_unrank(n, pidx),
    }
}

/// Cloneable exhaustive iterator over the group at the given level.
#[derive(Clone, Debug)]
pub struct GroupIter {
    m: u32,
    n: usize,
    level: CoverLevel,
    next: u64,
    total: u64,
}

impl Iterator for GroupIter {
    type Item = SpinElement;

    fn next(&mut self) -> Option<SpinElement> {
        if self.next >= self.total {
            return None;
        }
        let g = unrank_element(self.m, self.n, self.level, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GroupIter {}

/// Enumerate each element exactly once; errors when the order exceeds the budget.
pub fn enumerate_group(
    m: u32,
    n: usize,
    level: CoverLevel,
    budget: u64,
) -> Result<GroupIter, String> {
    let total = group_order(m, n, level)?;
    if total > budget {
        return Err(alloc::format!(
            "group order {} exceeds budget {}",
            total,
            budget
        ));
    }
    Ok(GroupIter {
        m,
        n,
        level,
        next: 0,
        total,
    })
}

/// Conjugacy class table over dense element indices.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub level: CoverLevel,
    /// Element index -> class id.
    pub class_of: Vec<u32>,
    /// Class id -> index of the first element found.
    pub reps: Vec<u64>,
    pub sizes: Vec<u64>,
}

impl ClassPartition {
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }
}

/// Partition the full cover into conjugacy classes by orbit search under
/// conjugation by the generators.
pub fn conjugacy_classes(cover: &Cover, budget: u64) -> Result<ClassPartition, String> {
    let (m, n) = (cover.m, cover.n);
    let total = group_order(m, n, CoverLevel::FullCover)?;
    if total > budget {
        return Err(alloc::format!(
            "group order {} exceeds budget {}",
            total,
            budget
        ));
    }
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        gens.push(SpinElement::r_gen(m, n, i));
    }
    if m > 1 {
        for j in 0..n {
            gens.push(SpinElement::eta_hat(m, n, j, 1));
        }
    }
    let gens: Vec<(SpinElement, SpinElement)> =
        gens.into_iter().map(|h| (h.clone(), cover.inv(&h))).collect();

    let mut class_of = vec![u32::MAX; total as usize];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for start in 0..total {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let cid = reps.len() as u32;
        class_of[start as usize] = cid;
        let mut stack = vec![start];
        let mut size = 0u64;
        while let Some(idx) = stack.pop() {
            size += 1;
            let g = unrank_element(m, n, CoverLevel::FullCover, idx);
            for (h, hinv) in &gens {
                let c = cover.mul(&cover.mul(h, &g), hinv);
                let ci = rank_element(&c, CoverLevel::FullCover);
                if class_of[ci as usize] == u32::MAX {
                    class_of[ci as usize] = cid;
                    stack.push(ci);
                }
            }
        }
        reps.push(start);
        sizes.push(size);
    }
    Ok(ClassPartition {
        level: CoverLevel::FullCover,
        class_of,
        reps,
        sizes,
    })
}

/// Conjugacy classes of the base group G(m,1,n).
pub fn conjugacy_classes_base(m: u32, n: usize, budget: u64) -> Result<ClassPartition, String> {
    let total = group_order(m, n, CoverLevel::Base)?;
    if total > budget {
        return Err(alloc::format!(
            "group order {} exceeds budget {}",
            total,
            budget
        ));
    }
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut g = BaseElement::identity(m, n);
        g.perm.swap(i, i + 1);
        gens.push(g);
    }
    if m > 1 {
        for j in 0..n {
            let mut g = BaseElement::identity(m, n);
            g.colors[j] = 1;
            gens.push(g);
        }
    }
    let rank = |g: &BaseElement| -> u64 {
        let mut cidx: u64 = 0;
        for &v in g.colors.iter().rev() {
            cidx = cidx * m as u64 + v as u64;
        }
        cidx * factorial_u64(n).unwrap() + perm_rank(&g.perm)
    };
    let unrank = |idx: u64| -> BaseElement {
        let f = factorial_u64(n).unwrap();
        let pidx = idx % f;
        let mut rest = idx / f;
        let mut colors = vec![0u32; n];
        for c in colors.iter_mut() {
            *c = (rest % m as u64) as u32;
            rest /= m as u64;
        }
        BaseElement {
            m,
            n,
            colors,
            perm: perm_unrank(n, pidx),
        }
    };
    let mut class_of = vec![u32::MAX; total as usize];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for start in 0..total {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let cid = reps.len() as u32;
        class_of[start as usize] = cid;
        let mut stack = vec![start];
        let mut size = 0u64;
        while let Some(idx) = stack.pop() {
            size += 1;
            let g = unrank(idx);
            for h in &gens {
                let ci = rank(&h.conj(&g));
                if class_of[ci as usize] == u32::MAX {
                    class_of[ci as usize] = cid;
                    stack.push(ci);
                }
            }
        }
        reps.push(start);
        sizes.push(size);
    }
    Ok(ClassPartition {
        level: CoverLevel::Base,
        class_of,
        reps,
        sizes,
    })
}
