//! Exact irreducible character values at finite n: ordinary characters of the
//! base group, spin characters of the main cover, the Clifford-type special
//! characters with their condition-gated branches, product forms, coset-sum
//! induction, and per-type inventories of irreducible labels with dimensions.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::combin::{
    delta_character, factorial, gamma_canonicalize, hook_dim, mn_character, multinomial,
    multipartitions, partitions, permutation_parity, spin_char_at_t, spin_labels,
    strict_partitions, t_nu_z_exponent, tau_forced_zero, tau_tuple_dim, ColorKind, GammaStratum,
    MultiPartition, Partition, SpinLabel,
};
use crate::cyclo::{Cyclo, CycloField};
use crate::group::{
    check_condition, condition_check, normalize_conjugacy, standard_decomposition, BaseElement,
    ConditionTag, Cover, Decomposition, SpinElement,
};
use crate::matrep::{omega_pow, special_rep, SpecialKind};

// ---------------------------------------------------------------------------
// Character values with a definedness flag.
// ---------------------------------------------------------------------------

/// A character value, or the marker that no closed formula covers the input.
/// Undefined values occur only on odd permutation words of spin tuple
/// characters, where the value is irrational in general.
#[derive(Clone)]
pub struct CharacterValue {
    pub value: Cyclo,
    pub defined: bool,
}

impl CharacterValue {
    pub fn of(value: Cyclo) -> Self {
        CharacterValue {
            value,
            defined: true,
        }
    }

    pub fn undefined(field: &Arc<CycloField>) -> Self {
        CharacterValue {
            value: Cyclo::zero(field),
            defined: false,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.defined && self.value.is_zero()
    }

    /// Product in which a defined zero absorbs an undefined factor.
    pub fn mul(&self, other: &CharacterValue) -> CharacterValue {
        if self.is_zero() {
            return self.clone();
        }
        if other.is_zero() {
            return other.clone();
        }
        CharacterValue {
            value: self.value.mul(&other.value),
            defined: self.defined && other.defined,
        }
    }
}

/// How a special-character value was obtained: by the closed formula, or by
/// an exact matrix trace where the closed form delegates a sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Formula,
    Oracle,
}

// ---------------------------------------------------------------------------
// Colour assignments of singles and blocks.
// ---------------------------------------------------------------------------

/// Walk all colour assignments of weighted items under per-colour capacities.
/// Item i occupies sizes[i] slots of its colour; admissible assignments keep
/// every colour within caps. Calls f once per admissible assignment.
fn for_each_assignment<F: FnMut(&[usize])>(sizes: &[u32], caps: &[u32], f: &mut F) {
    fn rec<F: FnMut(&[usize])>(
        sizes: &[u32],
        caps: &[u32],
        idx: usize,
        used: &mut [u32],
        assign: &mut [usize],
        f: &mut F,
    ) {
        if idx == sizes.len() {
            f(assign);
            return;
        }
        for c in 0..caps.len() {
            if used[c] + sizes[idx] <= caps[c] {
                used[c] += sizes[idx];
                assign[idx] = c;
                rec(sizes, caps, idx + 1, used, assign, f);
                used[c] -= sizes[idx];
            }
        }
    }
    let mut used = vec![0u32; caps.len()];
    let mut assign = vec![0usize; sizes.len()];
    rec(sizes, caps, 0, &mut used, &mut assign, f);
}

/// Colour-exponent step: tuples over the full dual use every character,
/// tuples over the even half use every second one.
fn colour_step(kind: ColorKind) -> u32 {
    match kind {
        ColorKind::Full => 1,
        ColorKind::Half => 2,
    }
}

// ---------------------------------------------------------------------------
// Ordinary (linear-type) characters of the base group.
// ---------------------------------------------------------------------------

/// Character of the ordinary irreducible of G(m,1,n) labelled by a tuple of
/// partitions, evaluated by summing over colour assignments of the singles
/// and cycles of g subject to the capacity constraint. A Half tuple is read
/// over the even colour characters.
pub fn linear_character(field: &Arc<CycloField>, lam: &MultiPartition, g: &BaseElement) -> Cyclo {
    let m = g.m;
    let n = g.n;
    assert_eq!(lam.n() as usize, n, "label size must match the degree");
    assert_eq!(
        lam.comps.len(),
        lam.kind.components(m),
        "component count must match the colour dual"
    );
    let step = colour_step(lam.kind);
    let lifted = SpinElement::from_parts(m, n, [0; 3], g.colors.clone(), g.perm.clone()).unwrap();
    let dec = standard_decomposition(&lifted);
    let caps = lam.nu();

    let mut sizes: Vec<u32> = vec![1; dec.singles.len()];
    sizes.extend(dec.blocks.iter().map(|b| b.len() as u32));

    let mut sum = Cyclo::zero(field);
    for_each_assignment(&sizes, &caps, &mut |assign| {
        let mut used = vec![0u32; caps.len()];
        let mut phase: u64 = 0;
        let mut lens: Vec<Vec<u32>> = vec![Vec::new(); caps.len()];
        for (i, &(_, a)) in dec.singles.iter().enumerate() {
            let c = assign[i];
            used[c] += 1;
            phase += (step as u64) * (c as u64) * (a as u64);
        }
        for (j, b) in dec.blocks.iter().enumerate() {
            let c = assign[dec.singles.len() + j];
            used[c] += b.len() as u32;
            phase += (step as u64) * (c as u64) * (b.ord as u64);
            lens[c].push(b.len() as u32);
        }
        let leftover: Vec<u32> = (0..caps.len()).map(|c| caps[c] - used[c]).collect();
        let b_coeff = multinomial(&leftover);
        let mut term = BigInt::from(b_coeff);
        for c in 0..caps.len() {
            if caps[c] == 0 {
                continue;
            }
            let mut parts = lens[c].clone();
            let filled: u32 = parts.iter().sum();
            parts.extend(core::iter::repeat(1).take((caps[c] - filled) as usize));
            let ty = Partition::from_unsorted(parts);
            term *= mn_character(&lam.comps[c], &ty);
        }
        let w = omega_pow(field, m, (phase % m as u64) as i64);
        sum = sum.add(&w.scale(&BigRational::from_integer(term)));
    });
    sum
}

// ---------------------------------------------------------------------------
// Spin characters of the main cover (z2, z3 acting trivially).
// ---------------------------------------------------------------------------

/// chi(tau_lam | w) for w in the rank-one cover of S_{|lam|}, tracking the
/// central sign of the concrete lift exactly. Undefined on odd words of type
/// lam with more than one row, where the value is irrational in general.
fn tau_at_canonical(field: &Arc<CycloField>, lam: &Partition, w: &SpinElement) -> CharacterValue {
    let nc = w.n;
    assert_eq!(lam.n() as usize, nc);
    assert_eq!(w.m, 1);
    let cover1 = Cover::new(1, nc);
    let dec = standard_decomposition(w);
    let mut lens: Vec<u32> = dec.blocks.iter().map(|b| b.len() as u32).collect();
    let used: usize = dec.blocks.iter().map(|b| b.len()).sum();
    lens.extend(core::iter::repeat(1).take(nc - used));
    let mu = Partition::from_unsorted(lens);
    if tau_forced_zero(lam, &mu) {
        return CharacterValue::of(Cyclo::zero(field));
    }

    // Conjugate onto consecutive intervals, longest cycle first, tracking z1.
    let mut blocks = dec.blocks.clone();
    blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cycle[0].cmp(&b.cycle[0])));
    let mut target = vec![usize::MAX; nc];
    let mut next = 0usize;
    for b in &blocks {
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
    let h = SpinElement::from_parts(1, nc, [0; 3], vec![0; nc], target).unwrap();
    let c1 = cover1.conj(&h, w).z[0];
    let c2 = crate::group::sigma_nu(&cover1, mu.parts()).z[0];
    let mut sign = (c1 + c2) % 2;

    let odd_word = (mu.n() - mu.len() as u32) % 2 == 1;
    let val = if !odd_word {
        sign = (sign + t_nu_z_exponent(&mu)) % 2;
        match spin_char_at_t(field, lam, &mu) {
            Some(v) => v,
            None => return CharacterValue::undefined(field),
        }
    } else if lam.len() == 1 {
        match delta_character(field, lam.n(), &mu) {
            Ok(v) => v,
            Err(_) => return CharacterValue::undefined(field),
        }
    } else {
        return CharacterValue::undefined(field);
    };
    CharacterValue::of(if sign == 1 { val.neg() } else { val })
}

/// Spin character of the main-cover irreducible labelled by a shifted tuple,
/// with the associate sign when the tuple is not self-associate. Covers the
/// spin type of odd m and, for even m, the type with z2 and z3 trivial; Half
/// tuples give the factors used by the two product types over the even dual.
///
/// Even permutation words are summed in closed form. Odd words are defined
/// only when forced to vanish or when the label is concentrated in a single
/// colour with a one-row partition.
pub fn spin_character_odd_iv(
    field: &Arc<CycloField>,
    label: &SpinLabel,
    gp: &SpinElement,
) -> CharacterValue {
    let m = gp.m;
    let n = gp.n;
    let lam = &label.lam;
    assert_eq!(lam.n() as usize, n, "label size must match the degree");
    assert_eq!(
        lam.comps.len(),
        lam.kind.components(m),
        "component count must match the colour dual"
    );
    let step = colour_step(lam.kind);
    let sign0: i8 = if gp.z[0] == 1 { -1 } else { 1 };
    let dec = standard_decomposition(gp);
    let sigma_odd = dec.l_parity() == 1;
    let mu_sign: i8 = match label.mu {
        Some(-1) if sigma_odd => -1,
        _ => 1,
    };

    // Single active colour: no splitting, evaluate the whole word directly.
    let active: Vec<usize> = (0..lam.comps.len()).filter(|&c| lam.comps[c].n() > 0).collect();
    if active.len() == 1 {
        let c = active[0];
        let ord: u64 = dec.singles.iter().map(|&(_, a)| a as u64).sum::<u64>()
            + dec.blocks.iter().map(|b| b.ord as u64).sum::<u64>();
        let phase = ((step as u64) * (c as u64) * ord) % m as u64;
        let word = SpinElement::from_parts(1, n, [0; 3], vec![0; n], gp.perm.clone()).unwrap();
        let inner = tau_at_canonical(field, &lam.comps[c], &word);
        if !inner.defined {
            return inner;
        }
        let mut v = inner.value.mul(&omega_pow(field, m, phase as i64));
        if sign0 * mu_sign < 0 {
            v = v.neg();
        }
        return CharacterValue::of(v);
    }

    let caps = lam.nu();
    if sigma_odd {
        if lam.s_stat() % 2 == 0 {
            return CharacterValue::of(Cyclo::zero(field));
        }
        // The empty sum still forces zero when no assignment is admissible.
        let mut sizes: Vec<u32> = vec![1; dec.singles.len()];
        sizes.extend(dec.blocks.iter().map(|b| b.len() as u32));
        let mut feasible = false;
        for_each_assignment(&sizes, &caps, &mut |_| feasible = true);
        if !feasible {
            return CharacterValue::of(Cyclo::zero(field));
        }
        return CharacterValue::undefined(field);
    }
    let starts: Vec<usize> = {
        let mut s = Vec::with_capacity(caps.len());
        let mut acc = 0usize;
        for &c in &caps {
            s.push(acc);
            acc += c as usize;
        }
        s
    };
    let mut sizes: Vec<u32> = vec![1; dec.singles.len()];
    sizes.extend(dec.blocks.iter().map(|b| b.len() as u32));
    let in_supp = {
        let mut v = vec![false; n];
        for &(q, _) in &dec.singles {
            v[q] = true;
        }
        for b in &dec.blocks {
            for &p in &b.cycle {
                v[p] = true;
            }
        }
        v
    };
    let cover1 = Cover::new(1, n);
    let s_elem = SpinElement::from_parts(1, n, [0; 3], vec![0; n], gp.perm.clone()).unwrap();

    let mut sum = Cyclo::zero(field);
    let mut all_defined = true;
    for_each_assignment(&sizes, &caps, &mut |assign| {
        if !all_defined {
            return;
        }
        let mut cursor = starts.clone();
        let mut target = vec![usize::MAX; n];
        let mut used = vec![0u32; caps.len()];
        let mut phase: u64 = 0;
        for (i, &(q, a)) in dec.singles.iter().enumerate() {
            let c = assign[i];
            target[q] = cursor[c];
            cursor[c] += 1;
            used[c] += 1;
            phase += (step as u64) * (c as u64) * (a as u64);
        }
        for (j, b) in dec.blocks.iter().enumerate() {
            let c = assign[dec.singles.len() + j];
            for (k, &p) in b.cycle.iter().enumerate() {
                target[p] = cursor[c] + k;
            }
            cursor[c] += b.len();
            used[c] += b.len() as u32;
            phase += (step as u64) * (c as u64) * (b.ord as u64);
        }
        for p in 0..n {
            if !in_supp[p] {
                let c = (0..caps.len())
                    .find(|&c| cursor[c] < starts[c] + caps[c] as usize)
                    .expect("capacity bookkeeping");
                target[p] = cursor[c];
                cursor[c] += 1;
            }
        }
        let w = SpinElement::from_parts(1, n, [0; 3], vec![0; n], target).unwrap();
        let cur = cover1.conj(&w, &s_elem);

        // Split the interval-preserving result into per-colour factors.
        let mut prod = SpinElement::identity(1, n);
        let mut pieces: Vec<SpinElement> = Vec::with_capacity(caps.len());
        for c in 0..caps.len() {
            let cap = caps[c] as usize;
            if cap == 0 {
                pieces.push(SpinElement::identity(1, 0.max(1)));
                continue;
            }
            let mut piece = SpinElement::identity(1, n);
            let mut local = SpinElement::identity(1, cap);
            for i in 0..cap {
                piece.perm[starts[c] + i] = cur.perm[starts[c] + i];
                local.perm[i] = cur.perm[starts[c] + i] - starts[c];
            }
            prod = cover1.mul(&prod, &piece);
            pieces.push(local);
        }
        debug_assert_eq!(prod.perm, cur.perm);
        let extra = (cur.z[0] + prod.z[0]) % 2;

        // Odd interval words pair off traceless Clifford generators of the
        // twisted central product, so any odd piece kills the term.
        let mut term = Cyclo::one(field);
        let mut zero = false;
        for c in 0..caps.len() {
            if caps[c] == 0 {
                continue;
            }
            if permutation_parity(&pieces[c].perm) == 1 {
                zero = true;
                break;
            }
            let inner = tau_at_canonical(field, &lam.comps[c], &pieces[c]);
            if inner.is_zero() {
                zero = true;
                break;
            }
            if !inner.defined {
                all_defined = false;
                return;
            }
            term = term.mul(&inner.value);
        }
        if zero {
            return;
        }
        let leftover: Vec<u32> = (0..caps.len()).map(|c| caps[c] - used[c]).collect();
        let mut coeff = BigRational::from_integer(BigInt::from(multinomial(&leftover)));
        if extra == 1 {
            coeff = -coeff;
        }
        let w_phase = omega_pow(field, m, (phase % m as u64) as i64);
        sum = sum.add(&term.mul(&w_phase).scale(&coeff));
    });
    if !all_defined {
        return CharacterValue::undefined(field);
    }
    // The twisted central product couples the odd-type components, doubling
    // the dimension once per pair.
    let s = lam.s_stat();
    if s >= 2 {
        sum = sum.scale(&BigRational::from_integer(BigInt::one() << (s / 2)));
    }
    if sign0 * mu_sign < 0 {
        sum = sum.neg();
    }
    CharacterValue::of(sum)
}

// ---------------------------------------------------------------------------
// Special characters of Clifford type.
// ---------------------------------------------------------------------------

/// The eight special characters: the two-valued Clifford characters of the
/// full cover, their alternating-subgroup refinements, the induced sum, and
/// the two-dimensional kernel characters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialCharKind {
    I0,
    IPlus,
    IMinus,
    II0,
    MhoPlus,
    MhoMinus,
    IiOdd,
    Vii2Dim(u32),
}

impl SpecialCharKind {
    pub fn name(self) -> String {
        match self {
            SpecialCharKind::I0 => String::from("I0"),
            SpecialCharKind::IPlus => String::from("I+"),
            SpecialCharKind::IMinus => String::from("I-"),
            SpecialCharKind::II0 => String::from("II0"),
            SpecialCharKind::MhoPlus => String::from("mho+"),
            SpecialCharKind::MhoMinus => String::from("mho-"),
            SpecialCharKind::IiOdd => String::from("IIodd"),
            SpecialCharKind::Vii2Dim(k) => format!("VII2dim:{}", k),
        }
    }

    pub fn parse(s: &str) -> Option<SpecialCharKind> {
        match s {
            "I0" => Some(SpecialCharKind::I0),
            "I+" => Some(SpecialCharKind::IPlus),
            "I-" => Some(SpecialCharKind::IMinus),
            "II0" => Some(SpecialCharKind::II0),
            "mho+" => Some(SpecialCharKind::MhoPlus),
            "mho-" => Some(SpecialCharKind::MhoMinus),
            "IIodd" => Some(SpecialCharKind::IiOdd),
            _ => s
                .strip_prefix("VII2dim:")
                .and_then(|t| t.parse::<u32>().ok())
                .map(SpecialCharKind::Vii2Dim),
        }
    }
}

fn blocks_len_minus_one_sum(dec: &Decomposition) -> u32 {
    dec.blocks.iter().map(|b| b.len() as u32 - 1).sum()
}

fn blocks_floor_sign(dec: &Decomposition) -> i8 {
    let e: u32 = dec.blocks.iter().map(|b| (b.len() as u32 - 1) / 2).sum();
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed value on the fully even branch: 2^{n'} prod_j (-1)^{[(l_j-1)/2]} 2^{-(l_j-1)/2}.
fn even_branch_value(field: &Arc<CycloField>, dec: &Decomposition, n: usize) -> Cyclo {
    let npr = (n / 2) as i64;
    let l_sum = blocks_len_minus_one_sum(dec) as i64;
    let v = Cyclo::sqrt2_power(field, 2 * npr - l_sum);
    if blocks_floor_sign(dec) == 1 {
        v
    } else {
        v.neg()
    }
}

/// Evaluate one of the special characters. The value comes with a provenance
/// marker: Formula for the closed branches, Oracle where the closed form
/// delegates a sign to an exact matrix trace.
pub fn special_spin_character(
    field: &Arc<CycloField>,
    cover: &Cover,
    kind: SpecialCharKind,
    gp: &SpinElement,
) -> Result<(Cyclo, Provenance), String> {
    let m = cover.m;
    let n = cover.n;
    if m % 2 != 0 {
        return Err(String::from("special characters require even m"));
    }
    assert_eq!(gp.m, m);
    assert_eq!(gp.n, n);

    if let SpecialCharKind::Vii2Dim(k) = kind {
        if k >= m / 2 {
            return Err(format!("colour index {} out of range for m = {}", k, m));
        }
        if !condition_check(gp, ConditionTag::VII) {
            return Ok((Cyclo::zero(field), Provenance::Formula));
        }
        let ord: u64 = gp.colors.iter().map(|&a| a as u64).sum();
        let mut v = omega_pow(field, m, ((k as u64 * ord) % m as u64) as i64)
            .scale(&BigRational::from_integer(BigInt::from(2)));
        if gp.z[2] == 1 {
            v = v.neg();
        }
        return Ok((v, Provenance::Formula));
    }

    match kind {
        SpecialCharKind::I0 | SpecialCharKind::II0 => {
            if n % 2 != 0 {
                return Err(format!("{} requires even n", kind.name()));
            }
        }
        _ => {
            if n % 2 != 1 {
                return Err(format!("{} requires odd n", kind.name()));
            }
        }
    }

    if kind == SpecialCharKind::IiOdd {
        if permutation_parity(&gp.perm) == 1 {
            return Ok((Cyclo::zero(field), Provenance::Formula));
        }
        let (p, pr1) = special_spin_character(field, cover, SpecialCharKind::MhoPlus, gp)?;
        let (q, pr2) = special_spin_character(field, cover, SpecialCharKind::MhoMinus, gp)?;
        let pr = if pr1 == Provenance::Oracle || pr2 == Provenance::Oracle {
            Provenance::Oracle
        } else {
            Provenance::Formula
        };
        return Ok((p.add(&q), pr));
    }

    let mho = matches!(kind, SpecialCharKind::MhoPlus | SpecialCharKind::MhoMinus);
    if mho && permutation_parity(&gp.perm) == 1 {
        return Err(String::from(
            "mho characters live on the even-permutation subgroup",
        ));
    }

    let (h, zx, nf) = normalize_conjugacy(cover, gp);
    let i_type = matches!(
        kind,
        SpecialCharKind::I0 | SpecialCharKind::IPlus | SpecialCharKind::IMinus
    );
    let z_sign: i8 = {
        let e = if i_type {
            zx[0] + zx[1] + zx[2]
        } else {
            zx[0] + zx[1]
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let nfe = nf.to_element();
    let dec = standard_decomposition(&nfe);
    let apply_sign = |v: Cyclo| if z_sign == 1 { v } else { v.neg() };

    let trace_oracle = |sk: SpecialKind| -> Result<Cyclo, String> {
        if n > 16 {
            return Err(String::from("degree too large for the sign trace oracle"));
        }
        let rep = special_rep(field, m, n, sk);
        Ok(rep.trace(&nfe))
    };

    match kind {
        SpecialCharKind::I0 => {
            if (dec.ord_parity() + dec.l_parity()) % 2 == 1 {
                return Ok((Cyclo::zero(field), Provenance::Formula));
            }
            if check_condition(&dec, n, ConditionTag::I00) {
                Ok((apply_sign(even_branch_value(field, &dec, n)), Provenance::Formula))
            } else {
                Ok((Cyclo::zero(field), Provenance::Formula))
            }
        }
        SpecialCharKind::IPlus | SpecialCharKind::IMinus => {
            if (dec.ord_parity() + dec.l_parity()) % 2 == 0 {
                if check_condition(&dec, n, ConditionTag::I00) {
                    Ok((apply_sign(even_branch_value(field, &dec, n)), Provenance::Formula))
                } else {
                    Ok((Cyclo::zero(field), Provenance::Formula))
                }
            } else if check_condition(&dec, n, ConditionTag::I11) {
                let sk = if kind == SpecialCharKind::IPlus {
                    SpecialKind::IPlus
                } else {
                    SpecialKind::IMinus
                };
                Ok((apply_sign(trace_oracle(sk)?), Provenance::Oracle))
            } else {
                Ok((Cyclo::zero(field), Provenance::Formula))
            }
        }
        SpecialCharKind::II0 => {
            if dec.l_parity() == 0 {
                if check_condition(&dec, n, ConditionTag::II00) {
                    let npr = (n / 2) as i64;
                    let l_sum = blocks_len_minus_one_sum(&dec);
                    let mut v = Cyclo::sqrt2_power(field, 2 * npr - l_sum as i64);
                    if (l_sum / 2) % 2 == 1 {
                        v = v.neg();
                    }
                    Ok((apply_sign(v), Provenance::Formula))
                } else {
                    Ok((Cyclo::zero(field), Provenance::Formula))
                }
            } else if check_condition(&dec, n, ConditionTag::II11) {
                Ok((apply_sign(trace_oracle(SpecialKind::II0)?), Provenance::Oracle))
            } else {
                Ok((Cyclo::zero(field), Provenance::Formula))
            }
        }
        SpecialCharKind::MhoPlus | SpecialCharKind::MhoMinus => {
            // Conjugation by an odd element swaps the pair, and the
            // normalizing conjugator is not parity-controlled.
            let mut plus = kind == SpecialCharKind::MhoPlus;
            if permutation_parity(&h.perm) == 1 {
                plus = !plus;
            }
            if dec.ord_parity() == 0 {
                if check_condition(&dec, n, ConditionTag::II00) {
                    Ok((apply_sign(even_branch_value(field, &dec, n)), Provenance::Formula))
                } else {
                    Ok((Cyclo::zero(field), Provenance::Formula))
                }
            } else if check_condition(&dec, n, ConditionTag::Mho11) {
                let eps = crate::group::epsilon_mho(&dec, n)
                    .expect("the odd branch requires full support");
                let npr = (n / 2) as i64;
                let l_sum = blocks_len_minus_one_sum(&dec) as i64;
                let mut v = Cyclo::sqrt2_power(field, 2 * npr - l_sum);
                v = v.mul(&Cyclo::i_unit(field).pow(npr));
                let mut s: i8 = eps;
                if !plus {
                    s = -s;
                }
                if s < 0 {
                    v = v.neg();
                }
                Ok((apply_sign(v), Provenance::Formula))
            } else {
                Ok((Cyclo::zero(field), Provenance::Formula))
            }
        }
        SpecialCharKind::IiOdd | SpecialCharKind::Vii2Dim(_) => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Product-form characters.
// ---------------------------------------------------------------------------

/// The three families whose characters factor as a special character times a
/// tuple character over the even colour dual.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductForm {
    I,
    IiEven,
    ViEven,
}

/// Label payload of a product-form character.
#[derive(Clone, Debug)]
pub enum ProductLabel {
    Linear(MultiPartition),
    Spin(SpinLabel),
}

/// Character of the product-form families: the special factor carries the
/// Clifford part, the tuple factor the colour and symmetric-group part.
pub fn product_form_character(
    field: &Arc<CycloField>,
    cover: &Cover,
    form: ProductForm,
    eps: Option<i8>,
    label: &ProductLabel,
    gp: &SpinElement,
) -> Result<CharacterValue, String> {
    let n = cover.n;
    let special_kind = match form {
        ProductForm::I => {
            if n % 2 == 0 {
                if eps.is_some() {
                    return Err(String::from("no sign tag for even n"));
                }
                SpecialCharKind::I0
            } else {
                match eps {
                    Some(1) => SpecialCharKind::IPlus,
                    Some(-1) => SpecialCharKind::IMinus,
                    _ => return Err(String::from("odd n requires a sign tag +1 or -1")),
                }
            }
        }
        ProductForm::IiEven | ProductForm::ViEven => {
            if n % 2 != 0 {
                return Err(String::from("this product form requires even n"));
            }
            if eps.is_some() {
                return Err(String::from("no sign tag for this form"));
            }
            SpecialCharKind::II0
        }
    };
    let (special, _) = special_spin_character(field, cover, special_kind, gp)?;
    match (form, label) {
        (ProductForm::I, ProductLabel::Linear(lam)) | (ProductForm::IiEven, ProductLabel::Linear(lam)) => {
            if lam.kind != ColorKind::Half {
                return Err(String::from("label must be a tuple over the even dual"));
            }
            let base = crate::group::phi(gp);
            let lin = linear_character(field, lam, &base);
            Ok(CharacterValue::of(special.mul(&lin)))
        }
        (ProductForm::ViEven, ProductLabel::Spin(sl)) => {
            if sl.lam.kind != ColorKind::Half {
                return Err(String::from("label must be a shifted tuple over the even dual"));
            }
            let iv = spin_character_odd_iv(field, sl, gp);
            Ok(CharacterValue::of(special).mul(&iv))
        }
        _ => Err(String::from("label kind does not match the product form")),
    }
}

// ---------------------------------------------------------------------------
// Induced characters by coset sums.
// ---------------------------------------------------------------------------

/// Coset-sum induced character: sum of the subgroup character over the
/// transversal conjugates that land in the subgroup. The membership test
/// receives the conjugated element.
pub fn induced_character<M, C>(
    field: &Arc<CycloField>,
    cover: &Cover,
    transversal: &[SpinElement],
    in_subgroup: M,
    chi: C,
    g: &SpinElement,
) -> CharacterValue
where
    M: Fn(&SpinElement) -> bool,
    C: Fn(&SpinElement) -> CharacterValue,
{
    let mut acc = CharacterValue::of(Cyclo::zero(field));
    for k in transversal {
        let u = cover.conj(k, g);
        if !in_subgroup(&u) {
            continue;
        }
        let v = chi(&u);
        acc = CharacterValue {
            value: acc.value.add(&v.value),
            defined: acc.defined && v.defined,
        };
    }
    acc
}

// ---------------------------------------------------------------------------
// Inventories of irreducibles per spin type.
// ---------------------------------------------------------------------------

/// The eight spin types of the representation group for even m, plus the
/// single nontrivial type for odd m and the ordinary type.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SpinType {
    Odd,
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl SpinType {
    pub const ALL_EVEN: [SpinType; 8] = [
        SpinType::I,
        SpinType::II,
        SpinType::III,
        SpinType::IV,
        SpinType::V,
        SpinType::VI,
        SpinType::VII,
        SpinType::VIII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpinType::Odd => "odd",
            SpinType::I => "I",
            SpinType::II => "II",
            SpinType::III => "III",
            SpinType::IV => "IV",
            SpinType::V => "V",
            SpinType::VI => "VI",
            SpinType::VII => "VII",
            SpinType::VIII => "VIII",
        }
    }

    pub fn parse(s: &str) -> Option<SpinType> {
        match s {
            "odd" => Some(SpinType::Odd),
            "I" => Some(SpinType::I),
            "II" => Some(SpinType::II),
            "III" => Some(SpinType::III),
            "IV" => Some(SpinType::IV),
            "V" => Some(SpinType::V),
            "VI" => Some(SpinType::VI),
            "VII" => Some(SpinType::VII),
            "VIII" => Some(SpinType::VIII),
            _ => None,
        }
    }

    /// Signs of (z1, z2, z3) in this type; for odd m only the first entry
    /// applies.
    pub fn central_signs(self) -> [i8; 3] {
        match self {
            SpinType::Odd => [-1, -1, 1],
            SpinType::I => [-1, -1, -1],
            SpinType::II => [-1, -1, 1],
            SpinType::III => [-1, 1, -1],
            SpinType::IV => [-1, 1, 1],
            SpinType::V => [1, -1, -1],
            SpinType::VI => [1, -1, 1],
            SpinType::VII => [1, 1, -1],
            SpinType::VIII => [1, 1, 1],
        }
    }
}

/// Structured label of an irreducible: the bare tuple data plus the tags the
/// classification attaches (signs, kappa and iota indices, associate pairs,
/// colour-vector classes).
#[derive(Clone, Debug)]
pub enum LabelPayload {
    Multi(MultiPartition),
    Spin(SpinLabel),
    Eps(i8, Box<LabelPayload>),
    Kappa(u8, Box<LabelPayload>),
    Iota(u8, Box<LabelPayload>),
    Pair(Box<LabelPayload>, Box<LabelPayload>),
    Gamma(Vec<u32>, Box<LabelPayload>),
}

impl core::fmt::Display for LabelPayload {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LabelPayload::Multi(mp) => write!(f, "{}", mp),
            LabelPayload::Spin(sl) => match sl.mu {
                None => write!(f, "{}", sl.lam),
                Some(s) => write!(f, "{}{}", if s > 0 { "+" } else { "-" }, sl.lam),
            },
            LabelPayload::Eps(e, p) => write!(f, "{}:{}", if *e > 0 { "+" } else { "-" }, p),
            LabelPayload::Kappa(k, p) => write!(f, "k{}:{}", k, p),
            LabelPayload::Iota(i, p) => write!(f, "i{}:{}", i, p),
            LabelPayload::Pair(a, b) => write!(f, "{{{}|{}}}", a, b),
            LabelPayload::Gamma(g, p) => {
                write!(f, "g[")?;
                for (i, v) in g.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", v)?;
                }
                write!(f, "]:{}", p)
            }
        }
    }
}

/// One irreducible: its spin type, classification label and dimension.
#[derive(Clone, Debug)]
pub struct IrrepEntry {
    pub y: SpinType,
    pub label: LabelPayload,
    pub dim: BigUint,
}

impl IrrepEntry {
    pub fn column_name(&self) -> String {
        format!("{}|{}", self.y.name(), self.label)
    }
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

fn plain_tuple_dim(comps: &[Partition]) -> BigUint {
    let nu: Vec<u32> = comps.iter().map(|p| p.n()).collect();
    let mut d = multinomial(&nu);
    for p in comps {
        d *= hook_dim(p);
    }
    d
}

fn multi(kind: ColorKind, comps: Vec<Partition>) -> MultiPartition {
    MultiPartition::new(kind, comps)
}

/// All tuples of partitions with prescribed component sizes.
fn tuples_with_sizes(sizes: &[u32], strict: bool) -> Vec<Vec<Partition>> {
    let menus: Vec<Vec<Partition>> = sizes
        .iter()
        .map(|&s| if strict { strict_partitions(s) } else { partitions(s) })
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<Partition> = Vec::with_capacity(sizes.len());
    fn rec(menus: &[Vec<Partition>], cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
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
    out
}

/// Relabelling of tuple components by the half-period colour shift.
fn tau0_shift(lam: &MultiPartition, m: u32) -> MultiPartition {
    let m0 = (m / 2) as usize;
    let k = lam.comps.len();
    let mut comps = vec![Partition::from_unsorted(Vec::new()); k];
    for c in 0..k {
        comps[(c + m0) % k] = lam.comps[c].clone();
    }
    MultiPartition::new(lam.kind, comps)
}

fn quasi_trivial_tuple(nu: &[u32]) -> Vec<Partition> {
    nu.iter()
        .map(|&s| {
            if s == 1 {
                Partition::from_unsorted(vec![1])
            } else {
                Partition::from_unsorted(Vec::new())
            }
        })
        .collect()
}

/// Colour-vector classes under the twisted action, one canonical member per
/// class, keyed and sorted by representative.
fn gamma_classes(m: u32, n: u32) -> Result<Vec<crate::combin::GammaClass>, String> {
    let total = (m as u64).checked_pow(n).filter(|&t| t <= 1 << 20);
    if total.is_none() {
        return Err(String::from("colour-vector enumeration out of budget"));
    }
    let mut seen: BTreeMap<Vec<u32>, crate::combin::GammaClass> = BTreeMap::new();
    let mut gamma = vec![0u32; n as usize];
    loop {
        let cls = gamma_canonicalize(&gamma, m);
        seen.entry(cls.rep.clone()).or_insert(cls);
        let mut i = 0usize;
        loop {
            if i == gamma.len() {
                return Ok(seen.into_values().collect());
            }
            gamma[i] += 1;
            if gamma[i] < m {
                break;
            }
            gamma[i] = 0;
            i += 1;
        }
    }
}

fn bin_sizes(rep: &[u32], m: u32) -> Vec<u32> {
    let mut nu = vec![0u32; m as usize];
    for &c in rep {
        nu[c as usize] += 1;
    }
    nu
}

/// Complete list of irreducibles of the given spin type with dimensions.
/// The dimensions satisfy sum of squares = m^n n! within each type.
pub fn irrep_inventory(m: u32, n: u32, y: SpinType) -> Result<Vec<IrrepEntry>, String> {
    if m == 0 || n == 0 {
        return Err(String::from("m and n must be positive"));
    }
    match y {
        SpinType::VIII => {}
        SpinType::Odd => {
            if m % 2 == 0 {
                return Err(String::from("the odd spin type requires odd m"));
            }
        }
        _ => {
            if m % 2 == 1 {
                return Err(format!("type {} requires even m", y.name()));
            }
        }
    }
    if y != SpinType::VIII && n < 4 {
        return Err(String::from("spin inventories are stated for n >= 4"));
    }
    let m0 = (m / 2).max(1) as usize;
    let half = n % 2 == 0;
    let mut out: Vec<IrrepEntry> = Vec::new();
    let push = |out: &mut Vec<IrrepEntry>, label: LabelPayload, dim: BigUint| {
        out.push(IrrepEntry { y, label, dim });
    };

    match y {
        SpinType::VIII => {
            for comps in multipartitions(m as usize, n) {
                let dim = plain_tuple_dim(&comps);
                push(&mut out, LabelPayload::Multi(multi(ColorKind::Full, comps)), dim);
            }
        }
        SpinType::Odd | SpinType::IV => {
            for sl in spin_labels(ColorKind::Full, m as usize, n) {
                let nu = sl.lam.nu();
                let dim = multinomial(&nu) * tau_tuple_dim(&sl.lam);
                push(&mut out, LabelPayload::Spin(sl), dim);
            }
        }
        SpinType::I => {
            for comps in multipartitions(m0, n) {
                let dim0 = plain_tuple_dim(&comps);
                let mp = multi(ColorKind::Half, comps);
                if half {
                    push(&mut out, LabelPayload::Multi(mp), pow2(n / 2) * &dim0);
                } else {
                    for e in [1i8, -1] {
                        push(
                            &mut out,
                            LabelPayload::Eps(e, Box::new(LabelPayload::Multi(mp.clone()))),
                            pow2((n - 1) / 2) * &dim0,
                        );
                    }
                }
            }
        }
        SpinType::II => {
            if half {
                for comps in multipartitions(m0, n) {
                    let dim0 = plain_tuple_dim(&comps);
                    push(
                        &mut out,
                        LabelPayload::Multi(multi(ColorKind::Half, comps)),
                        pow2(n / 2) * &dim0,
                    );
                }
            } else {
                for comps in multipartitions(m0, n) {
                    let mp = multi(ColorKind::Half, comps);
                    let t = mp.transpose();
                    let dim0 = plain_tuple_dim(&mp.comps);
                    let quasi = mp.comps.iter().all(|p| p.n() <= 1);
                    if quasi {
                        for e in [1i8, -1] {
                            push(
                                &mut out,
                                LabelPayload::Eps(e, Box::new(LabelPayload::Multi(mp.clone()))),
                                pow2((n - 1) / 2) * &dim0,
                            );
                        }
                    } else if mp == t {
                        for k in [0u8, 1] {
                            push(
                                &mut out,
                                LabelPayload::Kappa(k, Box::new(LabelPayload::Multi(mp.clone()))),
                                pow2((n - 1) / 2) * &dim0,
                            );
                        }
                    } else if mp < t {
                        push(
                            &mut out,
                            LabelPayload::Pair(
                                Box::new(LabelPayload::Multi(mp.clone())),
                                Box::new(LabelPayload::Multi(t)),
                            ),
                            pow2((n - 1) / 2 + 1) * &dim0,
                        );
                    }
                }
            }
        }
        SpinType::V => {
            for sl in spin_labels(ColorKind::Half, m0, n) {
                let nu = sl.lam.nu();
                let dim0 = multinomial(&nu) * tau_tuple_dim(&sl.lam);
                if half {
                    push(&mut out, LabelPayload::Spin(sl), pow2(n / 2) * &dim0);
                } else {
                    for e in [1i8, -1] {
                        push(
                            &mut out,
                            LabelPayload::Eps(e, Box::new(LabelPayload::Spin(sl.clone()))),
                            pow2((n - 1) / 2) * &dim0,
                        );
                    }
                }
            }
        }
        SpinType::VI => {
            if half {
                for sl in spin_labels(ColorKind::Half, m0, n) {
                    let nu = sl.lam.nu();
                    let dim0 = multinomial(&nu) * tau_tuple_dim(&sl.lam);
                    push(&mut out, LabelPayload::Spin(sl), pow2(n / 2) * &dim0);
                }
            } else {
                for comps in crate::combin::shifted_multipartitions(m0, n) {
                    let mp = multi(ColorKind::Half, comps);
                    let nu = mp.nu();
                    let dim0 = multinomial(&nu) * tau_tuple_dim(&mp);
                    let quasi = mp.comps.iter().all(|p| p.n() <= 1);
                    if mp.s_stat() % 2 == 1 {
                        push(
                            &mut out,
                            LabelPayload::Spin(SpinLabel {
                                lam: mp.clone(),
                                mu: None,
                            }),
                            pow2((n + 1) / 2) * &dim0,
                        );
                    } else if quasi {
                        for e in [1i8, -1] {
                            push(
                                &mut out,
                                LabelPayload::Eps(e, Box::new(LabelPayload::Multi(mp.clone()))),
                                pow2((n - 1) / 2) * &dim0,
                            );
                        }
                    } else {
                        for k in [0u8, 1] {
                            push(
                                &mut out,
                                LabelPayload::Kappa(k, Box::new(LabelPayload::Multi(mp.clone()))),
                                pow2((n - 1) / 2) * &dim0,
                            );
                        }
                    }
                }
            }
        }
        SpinType::III => {
            for cls in gamma_classes(m, n)? {
                let nu = bin_sizes(&cls.rep, m);
                let mult = multinomial(&nu);
                let gamma = cls.rep.clone();
                let wrap = |p: LabelPayload| LabelPayload::Gamma(gamma.clone(), Box::new(p));
                match cls.stratum {
                    GammaStratum::OddDistinct
                    | GammaStratum::EvenDistinctPlain
                    | GammaStratum::EvenDistinctPairFirst
                    | GammaStratum::EvenDistinctPairSecond => {
                        let qt = multi(ColorKind::Full, quasi_trivial_tuple(&nu));
                        push(&mut out, wrap(LabelPayload::Multi(qt)), factorial(n));
                    }
                    GammaStratum::OddRepeat | GammaStratum::EvenRepeatPrec => {
                        for comps in tuples_with_sizes(&nu, true) {
                            let mp = multi(ColorKind::Full, comps);
                            let tau = tau_tuple_dim(&mp);
                            if mp.s_stat() % 2 == 0 {
                                for k in [0u8, 1] {
                                    push(
                                        &mut out,
                                        wrap(LabelPayload::Kappa(
                                            k,
                                            Box::new(LabelPayload::Multi(mp.clone())),
                                        )),
                                        &mult * &tau,
                                    );
                                }
                            } else {
                                push(
                                    &mut out,
                                    wrap(LabelPayload::Multi(mp)),
                                    BigUint::from(2u32) * &mult * &tau,
                                );
                            }
                        }
                    }
                    GammaStratum::EvenRepeatEq => {
                        for comps in tuples_with_sizes(&nu, true) {
                            let mp = multi(ColorKind::Full, comps);
                            let shifted = tau0_shift(&mp, m);
                            let s_even = mp.s_stat() % 2 == 0;
                            let tau = tau_tuple_dim(&mp);
                            let rho = if s_even {
                                &tau / BigUint::from(2u32)
                            } else {
                                tau.clone()
                            };
                            if shifted == mp {
                                if s_even {
                                    for k in [0u8, 1] {
                                        for i in [0u8, 1] {
                                            push(
                                                &mut out,
                                                wrap(LabelPayload::Iota(
                                                    i,
                                                    Box::new(LabelPayload::Kappa(
                                                        k,
                                                        Box::new(LabelPayload::Multi(mp.clone())),
                                                    )),
                                                )),
                                                &mult * &rho,
                                            );
                                        }
                                    }
                                } else {
                                    for i in [0u8, 1] {
                                        push(
                                            &mut out,
                                            wrap(LabelPayload::Iota(
                                                i,
                                                Box::new(LabelPayload::Multi(mp.clone())),
                                            )),
                                            &mult * &rho,
                                        );
                                    }
                                }
                            } else if mp < shifted {
                                if s_even {
                                    for k in [0u8, 1] {
                                        push(
                                            &mut out,
                                            wrap(LabelPayload::Pair(
                                                Box::new(LabelPayload::Kappa(
                                                    k,
                                                    Box::new(LabelPayload::Multi(mp.clone())),
                                                )),
                                                Box::new(LabelPayload::Kappa(
                                                    k,
                                                    Box::new(LabelPayload::Multi(shifted.clone())),
                                                )),
                                            )),
                                            BigUint::from(2u32) * &mult * &rho,
                                        );
                                    }
                                } else {
                                    push(
                                        &mut out,
                                        wrap(LabelPayload::Pair(
                                            Box::new(LabelPayload::Multi(mp.clone())),
                                            Box::new(LabelPayload::Multi(shifted.clone())),
                                        )),
                                        BigUint::from(2u32) * &mult * &rho,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        SpinType::VII => {
            for cls in gamma_classes(m, n)? {
                let nu = bin_sizes(&cls.rep, m);
                let mult = multinomial(&nu);
                let gamma = cls.rep.clone();
                let wrap = |p: LabelPayload| LabelPayload::Gamma(gamma.clone(), Box::new(p));
                match cls.stratum {
                    GammaStratum::OddDistinct
                    | GammaStratum::EvenDistinctPlain
                    | GammaStratum::EvenDistinctPairFirst
                    | GammaStratum::EvenDistinctPairSecond => {
                        let qt = multi(ColorKind::Full, quasi_trivial_tuple(&nu));
                        push(&mut out, wrap(LabelPayload::Multi(qt)), factorial(n));
                    }
                    GammaStratum::OddRepeat | GammaStratum::EvenRepeatPrec => {
                        for comps in tuples_with_sizes(&nu, false) {
                            let mp = multi(ColorKind::Full, comps);
                            let t = mp.transpose();
                            let dim0 = {
                                let mut d = mult.clone();
                                for p in &mp.comps {
                                    d *= hook_dim(p);
                                }
                                d
                            };
                            if mp == t {
                                for k in [0u8, 1] {
                                    push(
                                        &mut out,
                                        wrap(LabelPayload::Kappa(
                                            k,
                                            Box::new(LabelPayload::Multi(mp.clone())),
                                        )),
                                        dim0.clone(),
                                    );
                                }
                            } else if mp < t {
                                push(
                                    &mut out,
                                    wrap(LabelPayload::Pair(
                                        Box::new(LabelPayload::Multi(mp.clone())),
                                        Box::new(LabelPayload::Multi(t)),
                                    )),
                                    BigUint::from(2u32) * &dim0,
                                );
                            }
                        }
                    }
                    GammaStratum::EvenRepeatEq => {
                        for comps in tuples_with_sizes(&nu, false) {
                            let mp = multi(ColorKind::Full, comps);
                            let t = mp.transpose();
                            let dim0 = {
                                let mut d = mult.clone();
                                for p in &mp.comps {
                                    d *= hook_dim(p);
                                }
                                d
                            };
                            let shifted = tau0_shift(&mp, m);
                            if mp == t {
                                // kappa flips under the shift, orbits have size 2.
                                let partner = tau0_shift(&mp, m);
                                if partner == mp || mp < partner {
                                    for k in [0u8, 1] {
                                        if partner == mp && k == 1 {
                                            continue;
                                        }
                                        push(
                                            &mut out,
                                            wrap(LabelPayload::Kappa(
                                                k,
                                                Box::new(LabelPayload::Multi(mp.clone())),
                                            )),
                                            dim0.clone(),
                                        );
                                    }
                                }
                            } else if mp < t {
                                let in_m = shifted == mp || shifted == t;
                                if in_m {
                                    for i in [0u8, 1] {
                                        push(
                                            &mut out,
                                            wrap(LabelPayload::Iota(
                                                i,
                                                Box::new(LabelPayload::Pair(
                                                    Box::new(LabelPayload::Multi(mp.clone())),
                                                    Box::new(LabelPayload::Multi(t.clone())),
                                                )),
                                            )),
                                            dim0.clone(),
                                        );
                                    }
                                } else {
                                    let partner_min = {
                                        let ts = shifted.transpose();
                                        if shifted < ts {
                                            shifted.clone()
                                        } else {
                                            ts
                                        }
                                    };
                                    if mp < partner_min {
                                        push(
                                            &mut out,
                                            wrap(LabelPayload::Pair(
                                                Box::new(LabelPayload::Multi(mp.clone())),
                                                Box::new(LabelPayload::Multi(t.clone())),
                                            )),
                                            BigUint::from(2u32) * &dim0,
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Sum of squared dimensions over an inventory.
pub fn block_square_sum(entries: &[IrrepEntry]) -> BigUint {
    let mut s = BigUint::from(0u32);
    for e in entries {
        s += &e.dim * &e.dim;
    }
    s
}

/// Check the regular-representation identity sum dim^2 = m^n n! for a type.
pub fn verify_block_identity(m: u32, n: u32, y: SpinType) -> Result<(), String> {
    let entries = irrep_inventory(m, n, y)?;
    let got = block_square_sum(&entries);
    let want = BigUint::from(m).pow(n) * factorial(n);
    if got == want {
        Ok(())
    } else {
        Err(format!(
            "type {} at ({}, {}): sum of squares {} != {}",
            y.name(),
            m,
            n,
            got,
            want
        ))
    }
}
