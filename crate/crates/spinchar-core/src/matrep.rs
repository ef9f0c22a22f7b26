//! Concrete matrix models used as oracles for the character formulas:
//! Clifford families, the basic spin representations of the symmetric-group
//! cover, colour representations of the twisted torus, seminormal matrices
//! for symmetric-group irreducibles, and the assembled special spin
//! representations of R(G(m,1,n)).
//!
//! Everything here is exact over a cyclotomic field except the float model
//! of the basic spin representation, whose matrix entries involve square
//! roots outside any cyclotomic field.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::One;

use crate::combin::{permutation_parity, MultiPartition, Partition};
use crate::cyclo::{Cyclo, CycloField};
use crate::group::{canonical_word, enumerate_group, BaseElement, Cover, CoverLevel, SpinElement};

/// Largest matrix dimension any exact representation is allowed to reach.
pub const MAX_EXACT_DIM: usize = 256;

/// omega^e where omega is the primitive m-th root of unity in `field`.
pub fn omega_pow(field: &Arc<CycloField>, m: u32, e: i64) -> Cyclo {
    let l = field.order() as i64;
    assert!(l % m as i64 == 0, "field order {} not divisible by m = {}", l, m);
    Cyclo::root(field, e.rem_euclid(m as i64) * (l / m as i64))
}

// ---------------------------------------------------------------------------
// dense exact matrices

/// Dense square matrix over a cyclotomic field, row major.
#[derive(Clone)]
pub struct CMatrix {
    dim: usize,
    entries: Vec<Cyclo>,
}

impl CMatrix {
    pub fn zeros(field: &Arc<CycloField>, dim: usize) -> CMatrix {
        CMatrix {
            dim,
            entries: vec![Cyclo::zero(field); dim * dim],
        }
    }

    pub fn identity(field: &Arc<CycloField>, dim: usize) -> CMatrix {
        let mut m = CMatrix::zeros(field, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Cyclo::one(field);
        }
        m
    }

    pub fn from_rows(field: &Arc<CycloField>, rows: Vec<Vec<Cyclo>>) -> CMatrix {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            entries.extend(row);
        }
        let _ = field;
        CMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let field = self.entries[0].field().clone();
        let mut out = CMatrix::zeros(&field, d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cur = &out.entries[i * d + j];
                    out.entries[i * d + j] = cur.add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(other.entries.iter()) {
            *x = x.add(y);
        }
        out
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(other.entries.iter()) {
            *x = x.sub(y);
        }
        out
    }

    pub fn neg(&self) -> CMatrix {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x = x.neg();
        }
        out
    }

    pub fn scale(&self, c: &Cyclo) -> CMatrix {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x = x.mul(c);
        }
        out
    }

    /// Kronecker product, left factor on the coarse index.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let da = self.dim;
        let db = other.dim;
        let d = da * db;
        let field = self.entries[0].field().clone();
        let mut out = CMatrix::zeros(&field, d);
        for i1 in 0..da {
            for j1 in 0..da {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..db {
                    for j2 in 0..db {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * db + i2, j1 * db + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclo {
        let field = self.entries[0].field().clone();
        let mut t = Cyclo::zero(&field);
        for i in 0..self.dim {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn eq_mat(&self, other: &CMatrix) -> bool {
        if self.dim != other.dim {
            return false;
        }
        self.entries
            .iter()
            .zip(other.entries.iter())
            .all(|(a, b)| a.sub(b).is_zero())
    }

    pub fn is_zero_mat(&self) -> bool {
        self.entries.iter().all(|a| a.is_zero())
    }
}

// ---------------------------------------------------------------------------
// Clifford families

fn pauli_eps(field: &Arc<CycloField>) -> CMatrix {
    CMatrix::identity(field, 2)
}

fn pauli_a(field: &Arc<CycloField>) -> CMatrix {
    let one = Cyclo::one(field);
    let zero = Cyclo::zero(field);
    CMatrix::from_rows(
        field,
        vec![vec![zero.clone(), one.clone()], vec![one, zero]],
    )
}

fn pauli_b(field: &Arc<CycloField>) -> CMatrix {
    let i = Cyclo::i_unit(field);
    let zero = Cyclo::zero(field);
    CMatrix::from_rows(
        field,
        vec![vec![zero.clone(), i.neg()], vec![i, zero]],
    )
}

fn pauli_c(field: &Arc<CycloField>) -> CMatrix {
    let one = Cyclo::one(field);
    let zero = Cyclo::zero(field);
    CMatrix::from_rows(
        field,
        vec![vec![one.clone(), zero.clone()], vec![zero, one.neg()]],
    )
}

/// The 2k+1 pairwise anticommuting involutions of degree 2^k:
/// M_{2i-1} = c^(i-1) (x) a (x) eps^(k-i), M_{2i} likewise with b, and
/// M_{2k+1} = c^k.  Index 0 of the result is M_1.
pub fn clifford_family(field: &Arc<CycloField>, k: usize) -> Vec<CMatrix> {
    let a = pauli_a(field);
    let b = pauli_b(field);
    let c = pauli_c(field);
    let eps = pauli_eps(field);
    let mut out = Vec::with_capacity(2 * k + 1);
    for idx in 1..=(2 * k + 1) {
        let mut m = CMatrix::identity(field, 1);
        if idx == 2 * k + 1 {
            for _ in 0..k {
                m = m.kron(&c);
            }
        } else {
            let i = (idx + 1) / 2;
            for _ in 0..(i - 1) {
                m = m.kron(&c);
            }
            m = m.kron(if idx % 2 == 1 { &a } else { &b });
            for _ in 0..(k - i) {
                m = m.kron(&eps);
            }
        }
        out.push(m);
    }
    out
}

/// X family used by the basic spin representation: 2N+1 matrices of degree
/// 2^N with N = floor((n-1)/2).
pub fn x_matrices(field: &Arc<CycloField>, n: usize) -> Vec<CMatrix> {
    assert!(n >= 1);
    clifford_family(field, (n - 1) / 2)
}

/// Y family used by the colour representations: 2k+1 matrices of degree 2^k
/// with k = floor(n/2).
pub fn y_matrices(field: &Arc<CycloField>, n: usize) -> Vec<CMatrix> {
    assert!(n >= 1);
    clifford_family(field, n / 2)
}

/// Y_j with the alternating sign, hat(Y)_j = (-1)^(j-1) Y_j; `j` is 1-based.
fn y_hat(ys: &[CMatrix], j: usize) -> CMatrix {
    if j % 2 == 1 {
        ys[j - 1].clone()
    } else {
        ys[j - 1].neg()
    }
}

// ---------------------------------------------------------------------------
// generic matrix representation of the cover

/// A matrix representation of R(G(m,1,n)) (or of a subgroup of it) given by
/// scalars on the centre, one matrix per twisted colour generator, and one
/// matrix per Coxeter generator.  An empty `etas` (resp. `rs`) family means
/// the representation is only defined on elements with trivial colour part
/// (resp. trivial permutation part).
pub struct MatRep {
    pub m: u32,
    pub n: usize,
    pub dim: usize,
    /// Scalars of (z1, z2, z3), each +1 or -1.
    pub z_signs: [i8; 3],
    /// Defined only on elements with an even permutation part.
    pub even_only: bool,
    etas: Vec<CMatrix>,
    rs: Vec<CMatrix>,
    field: Arc<CycloField>,
}

impl MatRep {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn eta(&self, j: usize) -> &CMatrix {
        &self.etas[j]
    }

    pub fn r_letter(&self, i: usize) -> &CMatrix {
        &self.rs[i]
    }

    pub fn has_etas(&self) -> bool {
        !self.etas.is_empty()
    }

    pub fn has_rs(&self) -> bool {
        !self.rs.is_empty()
    }

    /// Image of the permutation lift built from the canonical word; colours
    /// and centre are ignored, so this is only meaningful for linear factors.
    pub fn evaluate_perm(&self, perm: &[usize]) -> CMatrix {
        assert_eq!(perm.len(), self.n);
        let mut acc = CMatrix::identity(&self.field, self.dim);
        for i in canonical_word(perm) {
            acc = acc.mul(&self.rs[i]);
        }
        acc
    }

    /// Image of a cover element in normal form z-part * colour part * lift.
    pub fn evaluate(&self, g: &SpinElement) -> CMatrix {
        assert_eq!(g.n, self.n, "element size does not match the representation");
        let mut sign = 1i8;
        for t in 0..3 {
            if g.z[t] == 1 && self.z_signs[t] < 0 {
                sign = -sign;
            }
        }
        let mut acc = CMatrix::identity(&self.field, self.dim);
        if self.etas.is_empty() {
            assert!(
                g.colors.iter().all(|&c| c == 0),
                "representation has no colour matrices but the element has colours"
            );
        } else {
            assert_eq!(g.m, self.m, "colour order does not match");
            for j in 0..self.n {
                for _ in 0..g.colors[j] {
                    acc = acc.mul(&self.etas[j]);
                }
            }
        }
        if self.rs.is_empty() {
            assert!(
                g.perm.iter().enumerate().all(|(i, &p)| i == p),
                "representation has no Coxeter matrices but the element moves points"
            );
        } else {
            if self.even_only {
                assert_eq!(
                    permutation_parity(&g.perm),
                    0,
                    "representation is defined on even permutation parts only"
                );
            }
            for i in canonical_word(&g.perm) {
                acc = acc.mul(&self.rs[i]);
            }
        }
        if sign < 0 {
            acc.neg()
        } else {
            acc
        }
    }

    pub fn trace(&self, g: &SpinElement) -> Cyclo {
        self.evaluate(g).trace()
    }
}

// ---------------------------------------------------------------------------
// basic spin representations of the symmetric-group cover

/// The five concrete models of the basic spin matrices on the Coxeter
/// generators.  `Plain` and `Minus` are written in the hatted Y basis and
/// pair with the hatted colour matrices (the z3 = -1 assemblies); `Prime`,
/// `DoublePrime` and `TwoEven` are written in the plain Y basis and pair
/// with the unhatted colour matrices (the z3 = +1 assemblies).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NablaVariant {
    Plain,
    Minus,
    Prime,
    DoublePrime,
    TwoEven,
}

/// Spin representation of the symmetric-group cover on 2^floor(n/2)
/// dimensions; z1 acts by -1.
pub fn nabla_rep(field: &Arc<CycloField>, n: usize, variant: NablaVariant) -> MatRep {
    assert!(n >= 1);
    match variant {
        NablaVariant::Minus | NablaVariant::DoublePrime => {
            assert!(n % 2 == 1, "this variant needs odd n")
        }
        NablaVariant::TwoEven => assert!(n % 2 == 0, "this variant needs even n"),
        _ => {}
    }
    let ys = y_matrices(field, n);
    let inv_sqrt2 = Cyclo::sqrt2_power(field, -1);
    let letter = |j: usize| -> CMatrix {
        // (Y_j - Y_{j+1})/sqrt2 in the basis the variant uses
        match variant {
            NablaVariant::Plain | NablaVariant::Minus => {
                let last = variant == NablaVariant::Minus && j == n - 1;
                if last {
                    y_hat(&ys, j).add(&y_hat(&ys, j + 1)).scale(&inv_sqrt2)
                } else {
                    y_hat(&ys, j).sub(&y_hat(&ys, j + 1)).scale(&inv_sqrt2)
                }
            }
            NablaVariant::Prime | NablaVariant::DoublePrime => {
                let last = variant == NablaVariant::DoublePrime && j == n - 1;
                if last {
                    ys[j - 1].add(&ys[j]).scale(&inv_sqrt2)
                } else {
                    ys[j - 1].sub(&ys[j]).scale(&inv_sqrt2)
                }
            }
            NablaVariant::TwoEven => {
                let prime = ys[j - 1].sub(&ys[j]).scale(&inv_sqrt2);
                // i Y_{n+1} times the prime letter
                ys[n].scale(&Cyclo::i_unit(field)).mul(&prime)
            }
        }
    };
    let rs: Vec<CMatrix> = (1..n).map(letter).collect();
    let dim = 1usize << (n / 2);
    assert!(dim <= MAX_EXACT_DIM);
    MatRep {
        m: 1,
        n,
        dim,
        z_signs: [-1, 1, 1],
        even_only: false,
        etas: Vec::new(),
        rs,
        field: field.clone(),
    }
}

// ---------------------------------------------------------------------------
// colour representations of the twisted torus

/// Which member of an associate pair to build; `Plain` is the single class
/// for even n, `Plus`/`Minus` are the two associates for odd n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PKind {
    Plain,
    Plus,
    Minus,
}

/// The 2^floor(n/2)-dimensional representation of the twisted colour group
/// attached to gamma: eta-hat_j acts by omega^(gamma_j) hat(Y)_j, z2 by -1.
pub fn p_gamma_rep(
    field: &Arc<CycloField>,
    m: u32,
    n: usize,
    gamma: &[u32],
    kind: PKind,
) -> MatRep {
    assert!(m >= 2 && m % 2 == 0, "this family needs even m");
    assert_eq!(gamma.len(), n);
    assert!(gamma.iter().all(|&g| g < m));
    if kind != PKind::Plain {
        assert!(n % 2 == 1, "associate pair labels need odd n");
    }
    let mut geff = gamma.to_vec();
    if kind == PKind::Minus {
        geff[n - 1] = (geff[n - 1] + m / 2) % m;
    }
    let ys = y_matrices(field, n);
    let etas: Vec<CMatrix> = (1..=n)
        .map(|j| y_hat(&ys, j).scale(&omega_pow(field, m, geff[j - 1] as i64)))
        .collect();
    let dim = 1usize << (n / 2);
    assert!(dim <= MAX_EXACT_DIM);
    MatRep {
        m,
        n,
        dim,
        z_signs: [1, -1, 1],
        even_only: false,
        etas,
        rs: Vec::new(),
        field: field.clone(),
    }
}

/// Linear character of the colour group: eta-hat_j acts by omega^(gamma_j),
/// z2 and z3 act trivially.
pub fn zeta_gamma_rep(field: &Arc<CycloField>, m: u32, n: usize, gamma: &[u32]) -> MatRep {
    assert_eq!(gamma.len(), n);
    assert!(gamma.iter().all(|&g| g < m));
    let etas: Vec<CMatrix> = (0..n)
        .map(|j| {
            let mut e = CMatrix::zeros(field, 1);
            e.set(0, 0, omega_pow(field, m, gamma[j] as i64));
            e
        })
        .collect();
    MatRep {
        m,
        n,
        dim: 1,
        z_signs: [1, 1, 1],
        even_only: false,
        etas,
        rs: Vec::new(),
        field: field.clone(),
    }
}

/// Linear character of the colour group with z3 acting by -1 (the inner
/// character of the two-dimensional family below).
pub fn z_gamma_rep(field: &Arc<CycloField>, m: u32, n: usize, gamma: &[u32]) -> MatRep {
    let mut rep = zeta_gamma_rep(field, m, n, gamma);
    rep.z_signs = [1, 1, -1];
    rep
}

/// The two-dimensional representation with eta-hat_j acting by
/// diag(omega^k, -omega^k) for every j and every Coxeter generator acting by
/// the swap; z3 acts by -1.  Irreducible for n >= 2; 0 <= k < m/2.
pub fn two_dim_vii_rep(field: &Arc<CycloField>, m: u32, n: usize, k: u32) -> MatRep {
    assert!(m >= 2 && m % 2 == 0, "this family needs even m");
    assert!(k < m / 2);
    assert!(n >= 1);
    let omega_k = omega_pow(field, m, k as i64);
    let zero = Cyclo::zero(field);
    let eta = CMatrix::from_rows(
        field,
        vec![
            vec![omega_k.clone(), zero.clone()],
            vec![zero.clone(), omega_k.neg()],
        ],
    );
    let one = Cyclo::one(field);
    let swap = CMatrix::from_rows(
        field,
        vec![vec![zero.clone(), one.clone()], vec![one, zero]],
    );
    MatRep {
        m,
        n,
        dim: 2,
        z_signs: [1, 1, -1],
        even_only: false,
        etas: vec![eta; n],
        rs: vec![swap; n.saturating_sub(1)],
        field: field.clone(),
    }
}

// ---------------------------------------------------------------------------
// assembled special representations

/// The six special spin representations assembled from a colour family and a
/// basic spin family.  The z3 = -1 members (`I0`, `IPlus`, `IMinus`) use the
/// hatted Y basis on both factors; the z3 = +1 members (`II0`, `MhoPlus`,
/// `MhoMinus`) use the plain Y basis, which is the associate-equivalent model
/// of the same colour representation in which the intertwining relation
/// closes with a uniform sign.  `MhoPlus`/`MhoMinus` are representations of
/// the even-permutation subgroup only.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialKind {
    I0,
    IPlus,
    IMinus,
    II0,
    MhoPlus,
    MhoMinus,
}

pub fn special_rep(field: &Arc<CycloField>, m: u32, n: usize, kind: SpecialKind) -> MatRep {
    assert!(m >= 2 && m % 2 == 0, "special representations need even m");
    let ys = y_matrices(field, n);
    let dim = 1usize << (n / 2);
    assert!(dim <= MAX_EXACT_DIM);
    let (z_signs, even_only, etas, rs): ([i8; 3], bool, Vec<CMatrix>, Vec<CMatrix>) = match kind {
        SpecialKind::I0 => {
            assert!(n % 2 == 0 && n >= 2, "this representation needs even n");
            let etas = (1..=n).map(|j| y_hat(&ys, j)).collect();
            let rs = nabla_rep(field, n, NablaVariant::Plain);
            ([-1, -1, -1], false, etas, rs.rs)
        }
        SpecialKind::IPlus => {
            assert!(n % 2 == 1, "this representation needs odd n");
            let etas = (1..=n).map(|j| y_hat(&ys, j)).collect();
            let rs = nabla_rep(field, n, NablaVariant::Plain);
            ([-1, -1, -1], false, etas, rs.rs)
        }
        SpecialKind::IMinus => {
            assert!(n % 2 == 1, "this representation needs odd n");
            let etas = (1..=n)
                .map(|j| {
                    let h = y_hat(&ys, j);
                    if j == n {
                        h.neg()
                    } else {
                        h
                    }
                })
                .collect();
            let rs = nabla_rep(field, n, NablaVariant::Minus);
            ([-1, -1, -1], false, etas, rs.rs)
        }
        SpecialKind::II0 => {
            assert!(n % 2 == 0 && n >= 2, "this representation needs even n");
            let etas = (0..n).map(|j| ys[j].clone()).collect();
            let rs = nabla_rep(field, n, NablaVariant::TwoEven);
            ([-1, -1, 1], false, etas, rs.rs)
        }
        SpecialKind::MhoPlus => {
            assert!(n % 2 == 1, "this representation needs odd n");
            let etas = (0..n).map(|j| ys[j].clone()).collect();
            let rs = nabla_rep(field, n, NablaVariant::Prime);
            ([-1, -1, 1], true, etas, rs.rs)
        }
        SpecialKind::MhoMinus => {
            assert!(n % 2 == 1, "this representation needs odd n");
            let etas = (0..n)
                .map(|j| {
                    if j == n - 1 {
                        ys[j].neg()
                    } else {
                        ys[j].clone()
                    }
                })
                .collect();
            let rs = nabla_rep(field, n, NablaVariant::DoublePrime);
            ([-1, -1, 1], true, etas, rs.rs)
        }
    };
    MatRep {
        m,
        n,
        dim,
        z_signs,
        even_only,
        etas,
        rs,
        field: field.clone(),
    }
}

// ---------------------------------------------------------------------------
// induced representation over the even subgroup

/// A representation induced from an index-two subgroup given by the parity of
/// the permutation part; used for the odd member of the z3 = +1 family.
pub struct InducedCoverRep {
    pub inner: MatRep,
    pub transversal: Vec<SpinElement>,
    pub dim: usize,
}

/// Induction of the `MhoPlus` model from the even subgroup to the whole
/// cover; irreducible of degree 2^((n+1)/2).
pub fn ii_odd_rep(field: &Arc<CycloField>, m: u32, n: usize) -> InducedCoverRep {
    assert!(n % 2 == 1 && n >= 3, "this representation needs odd n >= 3");
    let inner = special_rep(field, m, n, SpecialKind::MhoPlus);
    let dim = 2 * inner.dim;
    assert!(dim <= MAX_EXACT_DIM);
    let transversal = vec![
        SpinElement::identity(m, n),
        SpinElement::r_gen(m, n, n - 2),
    ];
    InducedCoverRep {
        inner,
        transversal,
        dim,
    }
}

impl InducedCoverRep {
    pub fn evaluate(&self, cover: &Cover, g: &SpinElement) -> CMatrix {
        let d = self.inner.dim;
        let field = self.inner.field().clone();
        let mut out = CMatrix::zeros(&field, self.dim);
        for (s, ts) in self.transversal.iter().enumerate() {
            let ts_inv = cover.inv(ts);
            for (t, tt) in self.transversal.iter().enumerate() {
                let u = cover.mul(&ts_inv, &cover.mul(g, tt));
                if permutation_parity(&u.perm) != 0 {
                    continue;
                }
                let block = self.inner.evaluate(&u);
                for i in 0..d {
                    for j in 0..d {
                        out.set(s * d + i, t * d + j, block.get(i, j).clone());
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self, cover: &Cover, g: &SpinElement) -> Cyclo {
        let field = self.inner.field().clone();
        let mut tr = Cyclo::zero(&field);
        for ts in self.transversal.iter() {
            let u = cover.mul(&cover.inv(ts), &cover.mul(g, ts));
            if permutation_parity(&u.perm) == 0 {
                tr = tr.add(&self.inner.trace(&u));
            }
        }
        tr
    }
}

// ---------------------------------------------------------------------------
// seminormal matrices for symmetric-group irreducibles

/// Young's seminormal form of the irreducible S_n-representation labelled by
/// `lam`, with rational matrix entries; z1 acts trivially, so the
/// representation factors through S_n.
pub fn seminormal_rep(field: &Arc<CycloField>, lam: &Partition) -> MatRep {
    let n = lam.n() as usize;
    assert!(n >= 1);
    let tableaux = standard_tableaux(lam);
    let dim = tableaux.len();
    assert!(dim <= MAX_EXACT_DIM);
    let index: BTreeMap<Vec<(usize, usize)>, usize> = tableaux
        .iter()
        .cloned()
        .zip(0..)
        .collect();
    let mut rs = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        // letter i swaps the values i+1 and i+2
        let mut mat = CMatrix::zeros(field, dim);
        for (a, tab) in tableaux.iter().enumerate() {
            let (r1, c1) = tab[i];
            let (r2, c2) = tab[i + 1];
            if r1 == r2 {
                mat.set(a, a, Cyclo::one(field));
            } else if c1 == c2 {
                mat.set(a, a, Cyclo::one(field).neg());
            } else {
                let d = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64);
                let dr = BigRational::new(BigInt::one(), BigInt::from(d));
                mat.set(a, a, Cyclo::from_rational(field, dr.clone()));
                let mut swapped = tab.clone();
                swapped.swap(i, i + 1);
                let b = *index.get(&swapped).expect("swapped tableau is standard");
                let off = if d > 0 {
                    BigRational::one()
                } else {
                    BigRational::one() - dr.clone() * dr
                };
                mat.set(b, a, Cyclo::from_rational(field, off));
            }
        }
        rs.push(mat);
    }
    MatRep {
        m: 1,
        n,
        dim,
        z_signs: [1, 1, 1],
        even_only: false,
        etas: Vec::new(),
        rs,
        field: field.clone(),
    }
}

/// All standard Young tableaux of shape `lam`; tableau[v-1] = (row, col) of
/// the value v.  Deterministic order.
fn standard_tableaux(lam: &Partition) -> Vec<Vec<(usize, usize)>> {
    let rows: Vec<usize> = lam.parts().iter().map(|&p| p as usize).collect();
    let n: usize = rows.iter().sum();
    let mut out = Vec::new();
    let mut fill = vec![0usize; rows.len()];
    let mut cur: Vec<(usize, usize)> = Vec::with_capacity(n);
    fn rec(
        rows: &[usize],
        n: usize,
        fill: &mut Vec<usize>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for r in 0..rows.len() {
            if fill[r] >= rows[r] {
                continue;
            }
            if r > 0 && fill[r - 1] <= fill[r] {
                continue;
            }
            cur.push((r, fill[r]));
            fill[r] += 1;
            rec(rows, n, fill, cur, out);
            fill[r] -= 1;
            cur.pop();
        }
    }
    rec(&rows, n, &mut fill, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// induced representation of the base group from colours and seminormal parts

/// Matrix model of the ordinary irreducible of G(m,1,n) labelled by a tuple
/// of partitions: induced from the stabilizer of the colour character whose
/// value on position j is the colour of the component containing j, with the
/// seminormal tensor factor on the inside.
pub struct BreveRep {
    pub m: u32,
    pub n: usize,
    pub dim: usize,
    field: Arc<CycloField>,
    /// (colour exponent, start, len) per nonempty component, ascending colour.
    comps: Vec<(u32, usize, usize)>,
    inner: Vec<MatRep>,
    inner_dim: usize,
    transversal: Vec<Vec<usize>>,
    /// Position -> colour exponent of its component (in the base point).
    colour_of: Vec<u32>,
    /// Position -> component id, or usize::MAX outside every interval.
    comp_of: Vec<usize>,
}

pub fn breve_rep(field: &Arc<CycloField>, m: u32, lam: &MultiPartition) -> BreveRep {
    let n = lam.n() as usize;
    assert!(n >= 1);
    let mut comps = Vec::new();
    let mut inner = Vec::new();
    let mut colour_of = vec![0u32; n];
    let mut comp_of = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut start = 0usize;
    for (zeta, part) in lam.comps.iter().enumerate() {
        let len = part.n() as usize;
        sizes.push(len);
        if len == 0 {
            continue;
        }
        let id = comps.len();
        comps.push((zeta as u32, start, len));
        inner.push(seminormal_rep(field, part));
        for j in start..start + len {
            colour_of[j] = zeta as u32;
            comp_of[j] = id;
        }
        start += len;
    }
    assert_eq!(start, n);
    let inner_dim: usize = inner.iter().map(|r| r.dim).product();
    let transversal = interval_transversal(n, &comps);
    let dim = transversal.len() * inner_dim;
    assert!(
        dim <= MAX_EXACT_DIM,
        "induced dimension {} exceeds the dense-matrix cap {}",
        dim,
        MAX_EXACT_DIM
    );
    BreveRep {
        m,
        n,
        dim,
        field: field.clone(),
        comps,
        inner,
        inner_dim,
        transversal,
        colour_of,
        comp_of,
    }
}

/// Permutations t with t(interval) ascending onto each chosen target set, one
/// per coset of the interval stabilizer.
fn interval_transversal(n: usize, comps: &[(u32, usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let avail: Vec<usize> = (0..n).collect();
    let mut cur = vec![usize::MAX; n];
    fn rec(
        comps: &[(u32, usize, usize)],
        idx: usize,
        avail: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if idx == comps.len() {
            debug_assert!(avail.is_empty());
            out.push(cur.clone());
            return;
        }
        let (_, start, len) = comps[idx];
        let chosen = choose(avail, len);
        for (set, rest) in chosen {
            for (i, &dst) in set.iter().enumerate() {
                cur[start + i] = dst;
            }
            rec(comps, idx + 1, &rest, cur, out);
        }
    }
    rec(comps, 0, &avail, &mut cur, &mut out);
    out
}

/// All (sorted subset of size k, remainder) pairs of a sorted slice.
fn choose(avail: &[usize], k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let mut set = Vec::with_capacity(k);
    fn rec(
        avail: &[usize],
        from: usize,
        k: usize,
        set: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if set.len() == k {
            let rest: Vec<usize> = avail
                .iter()
                .cloned()
                .filter(|x| !set.contains(x))
                .collect();
            out.push((set.clone(), rest));
            return;
        }
        let need = k - set.len();
        for i in from..avail.len() {
            if avail.len() - i < need {
                break;
            }
            set.push(avail[i]);
            rec(avail, i + 1, k, set, out);
            set.pop();
        }
    }
    rec(avail, 0, k, &mut set, &mut out);
    out
}

impl BreveRep {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Image of a subgroup element, or None when the permutation part does
    /// not stabilize the colour intervals.
    fn inner_value(&self, u: &BaseElement) -> Option<CMatrix> {
        for j in 0..self.n {
            let cj = self.comp_of[j];
            if self.comp_of[u.perm[j]] != cj {
                return None;
            }
        }
        let mut exp: i64 = 0;
        for j in 0..self.n {
            exp += self.colour_of[j] as i64 * u.colors[j] as i64;
        }
        let scalar = omega_pow(&self.field, self.m, exp);
        let mut mat = CMatrix::identity(&self.field, 1);
        for (id, &(_, start, len)) in self.comps.iter().enumerate() {
            let sub: Vec<usize> = (start..start + len).map(|j| u.perm[j] - start).collect();
            mat = mat.kron(&self.inner[id].evaluate_perm(&sub));
        }
        Some(mat.scale(&scalar))
    }

    pub fn evaluate(&self, g: &BaseElement) -> CMatrix {
        assert_eq!(g.perm.len(), self.n);
        let d = self.inner_dim;
        let mut out = CMatrix::zeros(&self.field, self.dim);
        for (s, ts) in self.transversal.iter().enumerate() {
            let ts_el = perm_base(self.m, ts);
            let ts_inv = ts_el.inv();
            for (t, tt) in self.transversal.iter().enumerate() {
                let u = ts_inv.mul(g).mul(&perm_base(self.m, tt));
                if let Some(block) = self.inner_value(&u) {
                    for i in 0..d {
                        for j in 0..d {
                            out.set(s * d + i, t * d + j, block.get(i, j).clone());
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self, g: &BaseElement) -> Cyclo {
        let mut tr = Cyclo::zero(&self.field);
        for ts in self.transversal.iter() {
            let ts_el = perm_base(self.m, ts);
            let u = ts_el.inv().mul(g).mul(&ts_el);
            if let Some(block) = self.inner_value(&u) {
                tr = tr.add(&block.trace());
            }
        }
        tr
    }
}

fn perm_base(m: u32, perm: &[usize]) -> BaseElement {
    BaseElement {
        m,
        n: perm.len(),
        colors: vec![0; perm.len()],
        perm: perm.to_vec(),
    }
}

// ---------------------------------------------------------------------------
// float model of the basic spin representation

/// Dense complex float matrix, row major.
#[derive(Clone, Debug)]
pub struct FMatrix {
    dim: usize,
    entries: Vec<Complex<f64>>,
}

impl FMatrix {
    pub fn zeros(dim: usize) -> FMatrix {
        FMatrix {
            dim,
            entries: vec![Complex::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> FMatrix {
        let mut m = FMatrix::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<f64> {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<f64>) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = FMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..d {
                    out.entries[i * d + j] += a * other.entries[k * d + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(other.entries.iter()) {
            *x += *y;
        }
        out
    }

    pub fn scale(&self, c: Complex<f64>) -> FMatrix {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        self.add(&other.scale(Complex::new(-1.0, 0.0)))
    }

    pub fn trace(&self) -> Complex<f64> {
        let mut t = Complex::new(0.0, 0.0);
        for i in 0..self.dim {
            t += self.entries[i * self.dim + i];
        }
        t
    }

    pub fn max_abs_diff(&self, other: &FMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Float model of the basic spin representation of the symmetric-group
/// cover on 2^floor((n-1)/2) dimensions; its matrix entries involve square
/// roots that no cyclotomic field contains, hence the floats.
pub struct FRep {
    pub n: usize,
    pub dim: usize,
    rs: Vec<FMatrix>,
}

pub fn hauptdarstellung(n: usize) -> FRep {
    assert!(n >= 1);
    let k = (n - 1) / 2;
    // float Clifford family: same kron pattern as the exact one
    let fa = {
        let mut m = FMatrix::zeros(2);
        m.set(0, 1, Complex::new(1.0, 0.0));
        m.set(1, 0, Complex::new(1.0, 0.0));
        m
    };
    let fb = {
        let mut m = FMatrix::zeros(2);
        m.set(0, 1, Complex::new(0.0, -1.0));
        m.set(1, 0, Complex::new(0.0, 1.0));
        m
    };
    let fc = {
        let mut m = FMatrix::zeros(2);
        m.set(0, 0, Complex::new(1.0, 0.0));
        m.set(1, 1, Complex::new(-1.0, 0.0));
        m
    };
    let feps = FMatrix::identity(2);
    let kron = |x: &FMatrix, y: &FMatrix| -> FMatrix {
        let da = x.dim;
        let db = y.dim;
        let mut out = FMatrix::zeros(da * db);
        for i1 in 0..da {
            for j1 in 0..da {
                let a = x.get(i1, j1);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for i2 in 0..db {
                    for j2 in 0..db {
                        out.set(i1 * db + i2, j1 * db + j2, a * y.get(i2, j2));
                    }
                }
            }
        }
        out
    };
    let mut xs = Vec::with_capacity(2 * k + 1);
    for idx in 1..=(2 * k + 1) {
        let mut m = FMatrix::identity(1);
        if idx == 2 * k + 1 {
            for _ in 0..k {
                m = kron(&m, &fc);
            }
        } else {
            let i = (idx + 1) / 2;
            for _ in 0..(i - 1) {
                m = kron(&m, &fc);
            }
            m = kron(&m, if idx % 2 == 1 { &fa } else { &fb });
            for _ in 0..(k - i) {
                m = kron(&m, &feps);
            }
        }
        xs.push(m);
    }
    let dim = 1usize << k;
    use num_traits::Float;
    let a_coef = |j: usize| -> f64 {
        if j == 0 {
            0.0
        } else {
            -Float::sqrt((j as f64) / (2.0 * (j as f64 + 1.0)))
        }
    };
    let b_coef = |j: usize| -> f64 { Float::sqrt((j as f64 + 1.0) / (2.0 * j as f64)) };
    let mut rs = Vec::with_capacity(n.saturating_sub(1));
    for j in 1..n {
        // X_{j-1} and X_j, 1-based in the family
        let mut letter = xs[j - 1].scale(Complex::new(b_coef(j), 0.0));
        if j >= 2 {
            letter = letter.add(&xs[j - 2].scale(Complex::new(a_coef(j - 1), 0.0)));
        }
        rs.push(letter);
    }
    FRep { n, dim, rs }
}

impl FRep {
    pub fn evaluate(&self, g: &SpinElement) -> FMatrix {
        assert_eq!(g.n, self.n);
        assert!(
            g.colors.iter().all(|&c| c == 0),
            "the basic spin model is a representation of the permutation cover"
        );
        let mut acc = FMatrix::identity(self.dim);
        for i in canonical_word(&g.perm) {
            acc = acc.mul(&self.rs[i]);
        }
        if g.z[0] == 1 {
            acc = acc.scale(Complex::new(-1.0, 0.0));
        }
        acc
    }

    pub fn trace(&self, g: &SpinElement) -> Complex<f64> {
        self.evaluate(g).trace()
    }

    pub fn r_letter(&self, i: usize) -> &FMatrix {
        &self.rs[i]
    }
}

// ---------------------------------------------------------------------------
// relation checking and norms

/// Verify the defining relations of the cover on the stored matrices: squares
/// and braid relations of the Coxeter matrices, the z1 sign between disjoint
/// ones, the colour orders, the z2 sign between distinct colours, and the
/// z3-twisted conjugation rule between the two families.  For even-only
/// representations the conjugation rule is checked on products of two Coxeter
/// generators instead of single ones.
pub fn check_cover_relations(rep: &MatRep) -> Result<(), String> {
    let field = rep.field();
    let e = CMatrix::identity(field, rep.dim);
    let nr = rep.rs.len();
    for i in 0..nr {
        if !rep.rs[i].mul(&rep.rs[i]).eq_mat(&e) {
            return Err(alloc::format!("r_{} squared is not the identity", i + 1));
        }
    }
    for i in 0..nr.saturating_sub(1) {
        let lhs = rep.rs[i].mul(&rep.rs[i + 1]).mul(&rep.rs[i]);
        let rhs = rep.rs[i + 1].mul(&rep.rs[i]).mul(&rep.rs[i + 1]);
        if !lhs.eq_mat(&rhs) {
            return Err(alloc::format!("braid relation fails at r_{}", i + 1));
        }
    }
    let z1 = rep.z_signs[0];
    for i in 0..nr {
        for j in i + 2..nr {
            let lhs = rep.rs[i].mul(&rep.rs[j]);
            let mut rhs = rep.rs[j].mul(&rep.rs[i]);
            if z1 < 0 {
                rhs = rhs.neg();
            }
            if !lhs.eq_mat(&rhs) {
                return Err(alloc::format!(
                    "disjoint relation fails between r_{} and r_{}",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    let ne = rep.etas.len();
    for j in 0..ne {
        let mut p = CMatrix::identity(field, rep.dim);
        for _ in 0..rep.m {
            p = p.mul(&rep.etas[j]);
        }
        if !p.eq_mat(&e) {
            return Err(alloc::format!("colour generator {} does not have order dividing m", j + 1));
        }
    }
    let z2 = rep.z_signs[1];
    for j in 0..ne {
        for k in j + 1..ne {
            let lhs = rep.etas[j].mul(&rep.etas[k]);
            let mut rhs = rep.etas[k].mul(&rep.etas[j]);
            if z2 < 0 {
                rhs = rhs.neg();
            }
            if !lhs.eq_mat(&rhs) {
                return Err(alloc::format!(
                    "colour commutation fails between positions {} and {}",
                    j + 1,
                    k + 1
                ));
            }
        }
    }
    if ne > 0 && nr > 0 {
        let z3 = rep.z_signs[2];
        if !rep.even_only {
            for i in 0..nr {
                for j in 0..ne {
                    let target = if j == i {
                        i + 1
                    } else if j == i + 1 {
                        i
                    } else {
                        j
                    };
                    let lhs = rep.rs[i].mul(&rep.etas[j]).mul(&rep.rs[i]);
                    let mut rhs = rep.etas[target].clone();
                    if z3 < 0 {
                        rhs = rhs.neg();
                    }
                    if !lhs.eq_mat(&rhs) {
                        return Err(alloc::format!(
                            "conjugation rule fails for r_{} on colour {}",
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
        } else {
            // conjugate by r_i r_k only; the sign is z3^2 = +1
            for i in 0..nr {
                for k in 0..nr {
                    if i == k {
                        continue;
                    }
                    let w = rep.rs[i].mul(&rep.rs[k]);
                    let w_inv = rep.rs[k].mul(&rep.rs[i]);
                    for j in 0..ne {
                        // s_i s_k acting on 0-based colour positions
                        let after_k = if j == k {
                            k + 1
                        } else if j == k + 1 {
                            k
                        } else {
                            j
                        };
                        let target = if after_k == i {
                            i + 1
                        } else if after_k == i + 1 {
                            i
                        } else {
                            after_k
                        };
                        let lhs = w.mul(&rep.etas[j]).mul(&w_inv);
                        if !lhs.eq_mat(&rep.etas[target]) {
                            return Err(alloc::format!(
                                "even conjugation rule fails for r_{} r_{} on colour {}",
                                i + 1,
                                k + 1,
                                j + 1
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// <chi, chi> over the group (or over the even-permutation subgroup when the
/// representation only lives there); equals 1 exactly when irreducible.
pub fn irreducibility_norm(
    cover: &Cover,
    rep: &MatRep,
    budget: u64,
) -> Result<BigRational, String> {
    let field = rep.field().clone();
    let mut acc = Cyclo::zero(&field);
    let mut count: u64 = 0;
    for g in enumerate_group(cover.m, cover.n, CoverLevel::FullCover, budget)? {
        if rep.even_only && permutation_parity(&g.perm) != 0 {
            continue;
        }
        let chi = rep.trace(&g);
        acc = acc.add(&chi.mul(&chi.conj()));
        count += 1;
    }
    let total = acc
        .as_rational()
        .ok_or_else(|| String::from("norm sum is not rational"))?;
    Ok(total / BigRational::from_integer(BigInt::from(count)))
}

/// Same norm for the induced model over the full cover.
pub fn induced_irreducibility_norm(
    cover: &Cover,
    rep: &InducedCoverRep,
    budget: u64,
) -> Result<BigRational, String> {
    let field = rep.inner.field().clone();
    let mut acc = Cyclo::zero(&field);
    let mut count: u64 = 0;
    for g in enumerate_group(cover.m, cover.n, CoverLevel::FullCover, budget)? {
        let chi = rep.trace(cover, &g);
        acc = acc.add(&chi.mul(&chi.conj()));
        count += 1;
    }
    let total = acc
        .as_rational()
        .ok_or_else(|| String::from("norm sum is not rational"))?;
    Ok(total / BigRational::from_integer(BigInt::from(count)))
}

// ---------------------------------------------------------------------------
