use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result, DEFAULT_MAX_QUBITS};

/// A named block of qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Register {
    pub name: String,
    pub width: usize,
}

/// Position of a register inside the global basis index.
///
/// `shift` counts bits from the least significant end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub shift: usize,
    pub width: usize,
}

impl Span {
    #[inline]
    pub fn mask(self) -> usize {
        ((1usize << self.width) - 1) << self.shift
    }

    /// Register value held by global basis index `index`.
    #[inline]
    pub fn get(self, index: usize) -> usize {
        (index >> self.shift) & ((1usize << self.width) - 1)
    }

    #[inline]
    pub fn set(self, index: usize, value: usize) -> usize {
        (index & !self.mask()) | (value << self.shift)
    }

    /// Global bit for qubit `q` of the register, `q = 0` being the most
    /// significant qubit.
    #[inline]
    pub fn qubit_bit(self, q: usize) -> usize {
        1usize << (self.shift + self.width - 1 - q)
    }
}

/// Ordered named registers.
///
/// The first register occupies the most significant bits of the global
/// basis index, so for `[(R, n), (C, m)]` the basis state `|s>_R |t>_C` sits
/// at index `s * 2^m + t`. Within a register, qubit 0 is the most
/// significant bit of its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterLayout {
    registers: Vec<Register>,
    max_qubits: usize,
}

impl Default for RegisterLayout {
    fn default() -> Self {
        Self::empty()
    }
}

impl RegisterLayout {
    pub fn empty() -> Self {
        Self {
            registers: Vec::new(),
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }

    pub fn new(registers: &[(&str, usize)]) -> Result<Self> {
        let mut layout = Self::empty();
        for &(name, width) in registers {
            layout.push(name, width)?;
        }
        Ok(layout)
    }

    /// Changes the qubit cap. Fails if the layout is already wider.
    pub fn with_max_qubits(mut self, max_qubits: usize) -> Result<Self> {
        if self.total_width() > max_qubits {
            return Err(Error::QubitCapExceeded {
                required: self.total_width(),
                cap: max_qubits,
            });
        }
        self.max_qubits = max_qubits;
        Ok(self)
    }

    pub fn max_qubits(&self) -> usize {
        self.max_qubits
    }

    /// Appends a register as the new least significant block.
    pub fn push(&mut self, name: &str, width: usize) -> Result<()> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        if self.contains(name) {
            return Err(Error::DuplicateRegisterName(name.to_string()));
        }
        let required = self.total_width() + width;
        if required > self.max_qubits {
            return Err(Error::QubitCapExceeded {
                required,
                cap: self.max_qubits,
            });
        }
        self.registers.push(Register {
            name: name.to_string(),
            width,
        });
        Ok(())
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    pub fn contains(&self, name: &str) -> bool {
        self.registers.iter().any(|r| r.name == name)
    }

    pub fn total_width(&self) -> usize {
        self.registers.iter().map(|r| r.width).sum()
    }

    /// Number of basis states, `2^Q`.
    pub fn dim(&self) -> usize {
        1usize << self.total_width()
    }

    pub fn width(&self, name: &str) -> Result<usize> {
        self.span(name).map(|s| s.width)
    }

    pub fn span(&self, name: &str) -> Result<Span> {
        let mut shift = self.total_width();
        for r in &self.registers {
            shift -= r.width;
            if r.name == name {
                return Ok(Span {
                    shift,
                    width: r.width,
                });
            }
        }
        Err(Error::UnknownRegister(name.to_string()))
    }

    /// Global basis index for the given register values; unnamed registers
    /// are taken to be 0.
    pub fn index_of(&self, values: &[(&str, u64)]) -> Result<usize> {
        let mut index = 0;
        for &(name, value) in values {
            let span = self.span(name)?;
            check_value(value, span.width)?;
            index = span.set(index, value as usize);
        }
        Ok(index)
    }

    pub(crate) fn remove(&mut self, name: &str) -> Result<Register> {
        let pos = self
            .registers
            .iter()
            .position(|r| r.name == name)
            .ok_or_else(|| Error::UnknownRegister(name.to_string()))?;
        Ok(self.registers.remove(pos))
    }

    pub(crate) fn position(&self, name: &str) -> Result<usize> {
        self.registers
            .iter()
            .position(|r| r.name == name)
            .ok_or_else(|| Error::UnknownRegister(name.to_string()))
    }

    pub(crate) fn registers_mut(&mut self) -> &mut Vec<Register> {
        &mut self.registers
    }
}

pub(crate) fn check_value(value: u64, width: usize) -> Result<()> {
    if width < 64 && value >> width != 0 {
        return Err(Error::ValueOutOfRange { value, width });
    }
    Ok(())
}
