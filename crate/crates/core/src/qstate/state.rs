use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use super::layout::{check_value, Span};
use super::RegisterLayout;
use crate::{tolerance, Error, Result};

/// Pure state over a [`RegisterLayout`].
#[derive(Debug, Clone, PartialEq)]
pub struct QState {
    layout: RegisterLayout,
    amplitudes: Vec<Complex64>,
}

impl QState {
    /// Basis state with the named registers set to the given values and all
    /// others to 0.
    pub fn basis(layout: RegisterLayout, values: &[(&str, u64)]) -> Result<Self> {
        let index = layout.index_of(values)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); layout.dim()];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { layout, amplitudes })
    }

    /// Wraps an amplitude vector that is already normalized to within
    /// [`tolerance::NORM`].
    pub fn from_amplitudes(layout: RegisterLayout, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != layout.dim() {
            return Err(Error::EntryCount {
                expected: layout.dim(),
                actual: amplitudes.len(),
            });
        }
        let norm = norm_of(&amplitudes);
        if (norm - 1.0).abs() > tolerance::NORM {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { layout, amplitudes })
    }

    /// Divides `amplitudes` by their 2-norm.
    pub fn normalized(layout: RegisterLayout, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != layout.dim() {
            return Err(Error::EntryCount {
                expected: layout.dim(),
                actual: amplitudes.len(),
            });
        }
        let norm = norm_of(&amplitudes);
        if norm == 0.0 {
            return Err(Error::ZeroMatrix);
        }
        amplitudes.iter_mut().for_each(|z| *z /= norm);
        Ok(Self { layout, amplitudes })
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub(crate) fn from_parts(layout: RegisterLayout, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(layout.dim(), amplitudes.len());
        Self { layout, amplitudes }
    }

    /// Amplitude of the basis state given by register values (missing
    /// registers read as 0).
    pub fn amplitude(&self, values: &[(&str, u64)]) -> Result<Complex64> {
        Ok(self.amplitudes[self.layout.index_of(values)?])
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amplitudes)
    }

    /// Probability mass on components where every listed register holds the
    /// listed value.
    pub fn mass_where(&self, values: &[(&str, u64)]) -> Result<f64> {
        let (mask, pattern) = self.pattern(values)?;
        Ok(self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask == pattern)
            .map(|(_, z)| z.norm_sqr())
            .sum())
    }

    /// Bit mask and target bits selecting components with the given values.
    pub(crate) fn pattern(&self, values: &[(&str, u64)]) -> Result<(usize, usize)> {
        let mut mask = 0;
        let mut pattern = 0;
        for &(name, value) in values {
            let span = self.layout.span(name)?;
            check_value(value, span.width)?;
            if mask & span.mask() != 0 {
                return Err(Error::OverlappingSupport(name.to_string()));
            }
            mask |= span.mask();
            pattern = span.set(pattern, value as usize);
        }
        Ok((mask, pattern))
    }

    /// Appends `|value>` on a fresh register of `width` qubits as the least
    /// significant block.
    pub fn append_ancilla(&self, name: &str, width: usize, value: u64) -> Result<Self> {
        let mut layout = self.layout.clone();
        layout.push(name, width)?;
        check_value(value, width)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); layout.dim()];
        for (i, z) in self.amplitudes.iter().enumerate() {
            amplitudes[(i << width) | value as usize] = *z;
        }
        Ok(Self { layout, amplitudes })
    }

    /// Checks that register `name` holds `value` on all but at most
    /// [`tolerance::RESIDUAL_MASS`] of the state, then removes it.
    pub fn release(&self, name: &str, value: u64) -> Result<Self> {
        let span = self.layout.span(name)?;
        check_value(value, span.width)?;
        let stray: f64 = self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| span.get(*i) != value as usize)
            .map(|(_, z)| z.norm_sqr())
            .sum();
        if stray >= tolerance::RESIDUAL_MASS {
            return Err(Error::ResidualEntanglement {
                context: alloc::format!("register `{name}`"),
                mass: stray,
            });
        }
        Ok(self.restrict(name, span, value as usize))
    }

    /// Keeps the components where `name == value` and drops the register.
    /// No renormalization.
    pub(crate) fn restrict(&self, name: &str, span: Span, value: usize) -> Self {
        let mut layout = self.layout.clone();
        layout
            .remove(name)
            .expect("span was resolved from this layout");
        let low = (1usize << span.shift) - 1;
        let amplitudes = (0..layout.dim())
            .map(|j| {
                let high = (j >> span.shift) << (span.shift + span.width);
                self.amplitudes[high | (value << span.shift) | (j & low)]
            })
            .collect();
        Self { layout, amplitudes }
    }

    /// Fuses two adjacent registers into one, `first` becoming the high
    /// bits. No amplitudes move.
    pub fn merge_registers(&self, first: &str, second: &str, merged: &str) -> Result<Self> {
        let i = self.layout.position(first)?;
        let j = self.layout.position(second)?;
        if j != i + 1 {
            return Err(Error::NotAdjacent {
                first: first.to_string(),
                second: second.to_string(),
            });
        }
        if merged != first && merged != second && self.layout.contains(merged) {
            return Err(Error::DuplicateRegisterName(merged.to_string()));
        }
        let mut layout = self.layout.clone();
        let regs = layout.registers_mut();
        let tail = regs.remove(j);
        regs[i].width += tail.width;
        regs[i].name = merged.to_string();
        Ok(Self {
            layout,
            amplitudes: self.amplitudes.clone(),
        })
    }

    /// Reorders registers. `order` must name every register exactly once.
    pub fn permute_registers(&self, order: &[&str]) -> Result<Self> {
        let regs = self.layout.registers();
        if order.len() != regs.len() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "permutation names {} registers, layout has {}",
                order.len(),
                regs.len()
            )));
        }
        let mut layout = RegisterLayout::empty().with_max_qubits(self.layout.max_qubits())?;
        for name in order {
            layout.push(name, self.layout.width(name)?)?;
        }
        let pairs: Vec<(Span, Span)> = regs
            .iter()
            .map(|r| {
                (
                    self.layout.span(&r.name).unwrap(),
                    layout.span(&r.name).unwrap(),
                )
            })
            .collect();
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); layout.dim()];
        for (i, z) in self.amplitudes.iter().enumerate() {
            let j = pairs
                .iter()
                .fold(0, |acc, (old, new)| new.set(acc, old.get(i)));
            amplitudes[j] = *z;
        }
        Ok(Self { layout, amplitudes })
    }
}

/// Tensor product `a ⊗ b`; `a`'s registers become the high bits. The
/// result inherits `a`'s qubit cap.
pub fn tensor(a: &QState, b: &QState) -> Result<QState> {
    let mut layout = a.layout.clone();
    for r in b.layout.registers() {
        layout.push(&r.name, r.width)?;
    }
    let mut amplitudes = Vec::with_capacity(layout.dim());
    for x in &a.amplitudes {
        amplitudes.extend(b.amplitudes.iter().map(|y| x * y));
    }
    Ok(QState { layout, amplitudes })
}

pub(crate) fn norm_of(amplitudes: &[Complex64]) -> f64 {
    Float::sqrt(amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>())
}
