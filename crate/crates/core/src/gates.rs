//! Unitary primitives that act on whole registers, plus post-selection.
//!
//! Every gate mutates an exclusively held [`QState`] in place and returns
//! the [`GateStats`] it contributed. Multi-controlled X is treated as a
//! primitive; its cost is tracked through the number of control qubits.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::ops::{Add, AddAssign};

use num_complex::Complex64;
use num_traits::Float;

use crate::qstate::{QState, Span};
use crate::{tolerance, Error, Result};

/// Gate counts and sequential depth.
///
/// Gates emitted as one stage with pairwise disjoint qubit support count as
/// a single layer. Adding two `GateStats` composes them sequentially.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GateStats {
    pub pattern_controlled_x_count: usize,
    pub total_control_qubits: usize,
    pub cswap_count: usize,
    pub swap_count: usize,
    pub hadamard_count: usize,
    pub depth_layers: usize,
}

impl GateStats {
    pub fn primitive_count(&self) -> usize {
        self.pattern_controlled_x_count + self.cswap_count + self.swap_count + self.hadamard_count
    }
}

impl AddAssign for GateStats {
    fn add_assign(&mut self, rhs: Self) {
        self.pattern_controlled_x_count += rhs.pattern_controlled_x_count;
        self.total_control_qubits += rhs.total_control_qubits;
        self.cswap_count += rhs.cswap_count;
        self.swap_count += rhs.swap_count;
        self.hadamard_count += rhs.hadamard_count;
        self.depth_layers += rhs.depth_layers;
    }
}

impl Add for GateStats {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

/// One conjunct of a control pattern: `register == value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlCondition {
    pub register: String,
    pub value: u64,
}

impl ControlCondition {
    pub fn new(register: &str, value: u64) -> Self {
        Self {
            register: register.to_string(),
            value,
        }
    }
}

/// Flips `target` on every component whose bits under `mask` equal
/// `pattern`. `target` must lie outside `mask`.
fn controlled_flip(amps: &mut [Complex64], mask: usize, pattern: usize, target: usize) {
    debug_assert_eq!(mask & target, 0);
    for i in 0..amps.len() {
        if i & target == 0 && i & mask == pattern {
            amps.swap(i, i | target);
        }
    }
}

/// Flips ancilla qubit `j` wherever qubit `j` of `reg_a` equals qubit `j`
/// of `reg_b`. With the ancilla starting at 0, it ends at all-ones exactly
/// on the components where the two registers hold equal values.
///
/// Each qubit pair costs two 2-control flips, one for the pattern `00` and
/// one for `11`. The `00` flips act on disjoint qubits and form one layer,
/// the `11` flips a second.
pub fn compare_registers_mark(
    state: &mut QState,
    reg_a: &str,
    reg_b: &str,
    ancilla: &str,
) -> Result<GateStats> {
    let layout = state.layout();
    let a = layout.span(reg_a)?;
    let b = layout.span(reg_b)?;
    let anc = layout.span(ancilla)?;
    for (name, span) in [(reg_b, b), (ancilla, anc)] {
        if span.width != a.width {
            return Err(Error::WidthMismatch {
                a: reg_a.into(),
                wa: a.width,
                b: name.into(),
                wb: span.width,
            });
        }
    }
    disjoint(&[(reg_a, a.mask()), (reg_b, b.mask()), (ancilla, anc.mask())])?;
    let w = a.width;
    let amps = state.amplitudes_mut();
    for both_one in [false, true] {
        for j in 0..w {
            let (qa, qb) = (a.qubit_bit(j), b.qubit_bit(j));
            let pattern = if both_one { qa | qb } else { 0 };
            controlled_flip(amps, qa | qb, pattern, anc.qubit_bit(j));
        }
    }
    Ok(GateStats {
        pattern_controlled_x_count: 2 * w,
        total_control_qubits: 4 * w,
        depth_layers: 2,
        ..GateStats::default()
    })
}

/// `P ⊗ X + (I - P) ⊗ I`: flips qubit `target_qubit` (0 = most significant)
/// of `target_register` on the components where every condition holds.
///
/// An empty condition list is an unconditional X.
pub fn pattern_flag(
    state: &mut QState,
    conditions: &[ControlCondition],
    target_register: &str,
    target_qubit: usize,
) -> Result<GateStats> {
    let target = qubit(state, target_register, target_qubit)?;
    let mut controls = 0;
    for cond in conditions {
        if cond.register == target_register {
            return Err(Error::OverlappingSupport(cond.register.clone()));
        }
        controls += state.layout().width(&cond.register)?;
    }
    let values: Vec<(&str, u64)> = conditions
        .iter()
        .map(|c| (c.register.as_str(), c.value))
        .collect();
    let (mask, pattern) = state.pattern(&values)?;
    controlled_flip(state.amplitudes_mut(), mask, pattern, target);
    Ok(GateStats {
        pattern_controlled_x_count: 1,
        total_control_qubits: controls,
        depth_layers: 1,
        ..GateStats::default()
    })
}

/// Exchanges the values of `reg_a` and `reg_b` on the components where the
/// control qubit is 1. Counts as one C-SWAP per qubit pair, all in one
/// layer.
pub fn controlled_swap_registers(
    state: &mut QState,
    reg_a: &str,
    reg_b: &str,
    control_register: &str,
    control_qubit: usize,
) -> Result<GateStats> {
    let (a, b) = swap_spans(state, reg_a, reg_b)?;
    let control = qubit(state, control_register, control_qubit)?;
    if control & (a.mask() | b.mask()) != 0 {
        return Err(Error::OverlappingSupport(control_register.to_string()));
    }
    exchange(state.amplitudes_mut(), a, b, Some(control));
    Ok(GateStats {
        cswap_count: a.width,
        depth_layers: 1,
        ..GateStats::default()
    })
}

/// Exchanges the values of two equal-width registers everywhere.
pub fn swap_registers(state: &mut QState, reg_a: &str, reg_b: &str) -> Result<GateStats> {
    let (a, b) = swap_spans(state, reg_a, reg_b)?;
    exchange(state.amplitudes_mut(), a, b, None);
    Ok(GateStats {
        swap_count: a.width,
        depth_layers: 1,
        ..GateStats::default()
    })
}

/// Hadamard on every qubit of the listed registers, one layer.
pub fn hadamard_on_registers(state: &mut QState, regs: &[&str]) -> Result<GateStats> {
    let mut spans: Vec<(&str, usize)> = Vec::with_capacity(regs.len());
    let mut bits = Vec::new();
    for &name in regs {
        let span = state.layout().span(name)?;
        spans.push((name, span.mask()));
        bits.extend((0..span.width).map(|q| span.qubit_bit(q)));
    }
    disjoint(&spans)?;
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let amps = state.amplitudes_mut();
    for &bit in &bits {
        for i in 0..amps.len() {
            if i & bit == 0 {
                let (x, y) = (amps[i], amps[i | bit]);
                amps[i] = (x + y) * h;
                amps[i | bit] = (x - y) * h;
            }
        }
    }
    Ok(GateStats {
        hadamard_count: bits.len(),
        depth_layers: 1,
        ..GateStats::default()
    })
}

/// Projects `register` onto `value`, renormalizes, and removes the register.
///
/// Returns the post-measurement state and the exact probability of the
/// outcome. Fails with [`Error::PostSelectionImpossible`] below
/// [`tolerance::POSTSELECT_MIN`].
pub fn postselect(state: &QState, register: &str, value: u64) -> Result<(QState, f64)> {
    let span = state.layout().span(register)?;
    let probability = state.mass_where(&[(register, value)])?;
    if probability < tolerance::POSTSELECT_MIN {
        return Err(Error::PostSelectionImpossible { probability });
    }
    let mut kept = state.restrict(register, span, value as usize);
    let norm = Float::sqrt(probability);
    kept.amplitudes_mut().iter_mut().for_each(|z| *z /= norm);
    Ok((kept, probability))
}

fn qubit(state: &QState, register: &str, index: usize) -> Result<usize> {
    let span = state.layout().span(register)?;
    if index >= span.width {
        return Err(Error::QubitOutOfRange {
            register: register.to_string(),
            index,
            width: span.width,
        });
    }
    Ok(span.qubit_bit(index))
}

fn swap_spans(state: &QState, reg_a: &str, reg_b: &str) -> Result<(Span, Span)> {
    let a = state.layout().span(reg_a)?;
    let b = state.layout().span(reg_b)?;
    if a.width != b.width {
        return Err(Error::WidthMismatch {
            a: reg_a.into(),
            wa: a.width,
            b: reg_b.into(),
            wb: b.width,
        });
    }
    disjoint(&[(reg_a, a.mask()), (reg_b, b.mask())])?;
    Ok((a, b))
}

fn exchange(amps: &mut [Complex64], a: Span, b: Span, control: Option<usize>) {
    for i in 0..amps.len() {
        if control.is_some_and(|c| i & c == 0) {
            continue;
        }
        let (va, vb) = (a.get(i), b.get(i));
        if va > vb {
            let j = b.set(a.set(i, vb), va);
            amps.swap(i, j);
        }
    }
}

fn disjoint(supports: &[(&str, usize)]) -> Result<()> {
    let mut seen = 0;
    for &(name, mask) in supports {
        if seen & mask != 0 {
            return Err(Error::OverlappingSupport(name.to_string()));
        }
        seen |= mask;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{encode_matrix, tensor, ComplexMatrix, RegisterLayout};
    use alloc::vec;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn basis(regs: &[(&str, usize, u64)]) -> QState {
        let widths: Vec<(&str, usize)> = regs.iter().map(|&(n, w, _)| (n, w)).collect();
        let values: Vec<(&str, u64)> = regs.iter().map(|&(n, _, v)| (n, v)).collect();
        QState::basis(RegisterLayout::new(&widths).unwrap(), &values).unwrap()
    }

    fn value_of(state: &QState, reg: &str) -> u64 {
        let idx = state
            .amplitudes()
            .iter()
            .position(|z| z.norm_sqr() > 0.5)
            .unwrap();
        state.layout().span(reg).unwrap().get(idx) as u64
    }

    #[test]
    fn compare_equal_values_fills_ancilla() {
        let mut s = basis(&[("a", 2, 3), ("b", 2, 3), ("anc", 2, 0)]);
        let stats = compare_registers_mark(&mut s, "a", "b", "anc").unwrap();
        assert_eq!(value_of(&s, "anc"), 3);
        assert_eq!(stats.pattern_controlled_x_count, 4);
        assert_eq!(stats.total_control_qubits, 8);
        assert_eq!(stats.depth_layers, 2);
    }

    #[test]
    fn compare_complementary_and_partial() {
        let mut s = basis(&[("a", 2, 0), ("b", 2, 3), ("anc", 2, 0)]);
        compare_registers_mark(&mut s, "a", "b", "anc").unwrap();
        assert_eq!(value_of(&s, "anc"), 0);
        // 10 vs 11 agree only on the first (most significant) qubit
        let mut s = basis(&[("a", 2, 2), ("b", 2, 3), ("anc", 2, 0)]);
        compare_registers_mark(&mut s, "a", "b", "anc").unwrap();
        assert_eq!(value_of(&s, "anc"), 0b10);
    }

    #[test]
    fn compare_width_mismatch() {
        let mut s = basis(&[("a", 2, 0), ("b", 1, 0), ("anc", 2, 0)]);
        assert!(matches!(
            compare_registers_mark(&mut s, "a", "b", "anc"),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn flag_on_all_ones_pattern() {
        let mut s = basis(&[("B1", 2, 3), ("B2", 2, 3), ("B3", 1, 0)]);
        let conds = [
            ControlCondition::new("B1", 3),
            ControlCondition::new("B2", 3),
        ];
        let stats = pattern_flag(&mut s, &conds, "B3", 0).unwrap();
        assert_eq!(value_of(&s, "B3"), 1);
        assert_eq!(
            stats,
            GateStats {
                pattern_controlled_x_count: 1,
                total_control_qubits: 4,
                depth_layers: 1,
                ..Default::default()
            }
        );
        let before = s.clone();
        pattern_flag(&mut s, &conds, "B3", 0).unwrap();
        pattern_flag(&mut s, &conds, "B3", 0).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn flag_selects_one_branch() {
        // R1 C1 hold [[1,2],[3,4]]/sqrt(30), C2 = (|0> + |1>)/sqrt 2, k = 1
        let a = ComplexMatrix::from_real(2, 2, &[1., 2., 3., 4.]).unwrap();
        let enc = encode_matrix(&a, "R1", "C1").unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let aux =
            QState::from_amplitudes(RegisterLayout::new(&[("C2", 1)]).unwrap(), vec![c(h), c(h)])
                .unwrap();
        let mut s = tensor(&enc.state, &aux)
            .unwrap()
            .append_ancilla("B1", 1, 0)
            .unwrap();
        pattern_flag(&mut s, &[ControlCondition::new("C2", 1)], "B1", 0).unwrap();
        // index = R1 * 8 + C1 * 4 + C2 * 2 + B1
        let norm = Float::sqrt(60.0);
        let mut expected = [0.0; 16];
        for (i, j, v) in [(0, 0, 1.0), (0, 1, 2.0), (1, 0, 3.0), (1, 1, 4.0)] {
            expected[i * 8 + j * 4] = v / norm;
            expected[i * 8 + j * 4 + 2 + 1] = v / norm;
        }
        for (z, e) in s.amplitudes().iter().zip(expected) {
            assert!((z - c(e)).norm() < 1e-15);
        }
    }

    #[test]
    fn flag_errors() {
        let mut s = basis(&[("a", 2, 0), ("t", 1, 0)]);
        assert!(matches!(
            pattern_flag(&mut s, &[ControlCondition::new("t", 0)], "t", 0),
            Err(Error::OverlappingSupport(_))
        ));
        assert!(matches!(
            pattern_flag(&mut s, &[ControlCondition::new("x", 0)], "t", 0),
            Err(Error::UnknownRegister(_))
        ));
        assert!(matches!(
            pattern_flag(
                &mut s,
                &[ControlCondition::new("a", 1), ControlCondition::new("a", 1)],
                "t",
                0
            ),
            Err(Error::OverlappingSupport(_))
        ));
        assert!(matches!(
            pattern_flag(&mut s, &[], "t", 1),
            Err(Error::QubitOutOfRange { .. })
        ));
        assert!(matches!(
            pattern_flag(&mut s, &[ControlCondition::new("a", 4)], "t", 0),
            Err(Error::ValueOutOfRange { .. })
        ));
    }

    #[test]
    fn cswap_exchanges_only_when_control_set() {
        let mut s = basis(&[("c1", 2, 1), ("c2", 2, 2), ("b", 1, 1)]);
        let stats = controlled_swap_registers(&mut s, "c1", "c2", "b", 0).unwrap();
        assert_eq!((value_of(&s, "c1"), value_of(&s, "c2")), (2, 1));
        assert_eq!(
            stats,
            GateStats {
                cswap_count: 2,
                depth_layers: 1,
                ..Default::default()
            }
        );

        let mut s = basis(&[("c1", 2, 1), ("c2", 2, 2), ("b", 1, 0)]);
        let before = s.clone();
        controlled_swap_registers(&mut s, "c1", "c2", "b", 0).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn cswap_errors() {
        let mut s = basis(&[("c1", 2, 0), ("c2", 1, 0), ("b", 1, 0)]);
        assert!(matches!(
            controlled_swap_registers(&mut s, "c1", "c2", "b", 0),
            Err(Error::WidthMismatch { .. })
        ));
        let mut s = basis(&[("c1", 1, 0), ("c2", 1, 0)]);
        assert!(matches!(
            controlled_swap_registers(&mut s, "c1", "c2", "c1", 0),
            Err(Error::OverlappingSupport(_))
        ));
    }

    #[test]
    fn swap_moves_column_register() {
        let mut s = basis(&[("R1", 1, 1), ("C1", 2, 3), ("R2", 2, 2), ("C2", 1, 0)]);
        let stats = swap_registers(&mut s, "C1", "R2").unwrap();
        assert_eq!((value_of(&s, "C1"), value_of(&s, "R2")), (2, 3));
        assert_eq!(
            stats,
            GateStats {
                swap_count: 2,
                depth_layers: 1,
                ..Default::default()
            }
        );
        let mut eq = basis(&[("a", 2, 1), ("b", 2, 1)]);
        let before = eq.clone();
        swap_registers(&mut eq, "a", "b").unwrap();
        assert_eq!(eq, before);
    }

    #[test]
    fn hadamard_on_zero() {
        let mut s = basis(&[("q", 1, 0)]);
        let stats = hadamard_on_registers(&mut s, &["q"]).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amplitudes()[0] - c(h)).norm() < 1e-15);
        assert!((s.amplitudes()[1] - c(h)).norm() < 1e-15);
        assert_eq!(stats.hadamard_count, 1);
        assert!(matches!(
            hadamard_on_registers(&mut s, &["x"]),
            Err(Error::UnknownRegister(_))
        ));
        assert!(matches!(
            hadamard_on_registers(&mut s, &["q", "q"]),
            Err(Error::OverlappingSupport(_))
        ));
    }

    #[test]
    fn hadamard_pair_on_flag_branches() {
        // |10> and |01> each land on |00> with coefficient +1/2
        for v in [0b10, 0b01] {
            let mut s = basis(&[("B1", 1, v >> 1), ("B2", 1, v & 1)]);
            hadamard_on_registers(&mut s, &["B1", "B2"]).unwrap();
            assert!((s.amplitudes()[0] - c(0.5)).norm() < 1e-15);
        }
    }

    #[test]
    fn postselect_basis_and_zero() {
        let s = basis(&[("q", 1, 1), ("b", 2, 2)]);
        let (post, p) = postselect(&s, "b", 2).unwrap();
        assert_eq!(p, 1.0);
        assert_eq!(post, basis(&[("q", 1, 1)]));
        assert!(matches!(
            postselect(&s, "b", 1),
            Err(Error::PostSelectionImpossible { .. })
        ));
        assert!(matches!(
            postselect(&s, "b", 7),
            Err(Error::ValueOutOfRange { .. })
        ));
    }

    #[test]
    fn stats_add_sequentially() {
        let a = GateStats {
            swap_count: 2,
            depth_layers: 1,
            ..Default::default()
        };
        let b = GateStats {
            hadamard_count: 3,
            depth_layers: 1,
            ..Default::default()
        };
        let sum = a + b;
        assert_eq!(sum.depth_layers, 2);
        assert_eq!(sum.primitive_count(), 5);
    }
}
