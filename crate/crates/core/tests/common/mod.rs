#![allow(dead_code)]

use std::collections::BTreeMap;

use qmatrix_core::{Complex64, ComplexMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    let entries = (0..rows * cols)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::new(rows, cols, entries).unwrap()
}

pub fn real(rows: usize, cols: usize, values: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_real(rows, cols, values).unwrap()
}

pub fn normalized(a: &ComplexMatrix) -> ComplexMatrix {
    a.scale(1.0 / a.frobenius_norm())
}

/// Sparse reference simulator keyed by per-register values.
///
/// Shares no code with the library's dense statevector: basis states are
/// vectors of register values, gates rewrite those vectors directly.
#[derive(Clone, Debug)]
pub struct RefState {
    pub regs: Vec<(String, usize)>,
    pub terms: BTreeMap<Vec<u64>, Complex64>,
}

impl RefState {
    pub fn from_matrix(a: &ComplexMatrix, row: &str, col: &str) -> Self {
        let norm = a.frobenius_norm();
        let mut terms = BTreeMap::new();
        for s in 0..a.rows() {
            for t in 0..a.cols() {
                terms.insert(vec![s as u64, t as u64], a[(s, t)] / norm);
            }
        }
        let width = |d: usize| d.trailing_zeros() as usize;
        Self {
            regs: vec![(row.into(), width(a.rows())), (col.into(), width(a.cols()))],
            terms,
        }
    }

    pub fn from_terms(regs: &[(&str, usize)], terms: &[(&[u64], f64)]) -> Self {
        let norm: f64 = terms.iter().map(|(_, a)| a * a).sum::<f64>().sqrt();
        Self {
            regs: regs.iter().map(|&(n, w)| (n.to_string(), w)).collect(),
            terms: terms
                .iter()
                .map(|(k, a)| (k.to_vec(), Complex64::new(a / norm, 0.0)))
                .collect(),
        }
    }

    fn pos(&self, name: &str) -> usize {
        self.regs.iter().position(|(n, _)| n == name).unwrap()
    }

    pub fn tensor(&self, other: &RefState) -> RefState {
        let mut terms = BTreeMap::new();
        for (ka, za) in &self.terms {
            for (kb, zb) in &other.terms {
                let mut key = ka.clone();
                key.extend(kb);
                terms.insert(key, za * zb);
            }
        }
        let mut regs = self.regs.clone();
        regs.extend(other.regs.iter().cloned());
        RefState { regs, terms }
    }

    pub fn add(&mut self, name: &str, width: usize) {
        self.regs.push((name.into(), width));
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(mut k, z)| {
                k.push(0);
                (k, z)
            })
            .collect();
    }

    fn map_keys(&mut self, f: impl Fn(&mut Vec<u64>)) {
        let mut out: BTreeMap<Vec<u64>, Complex64> = BTreeMap::new();
        for (mut k, z) in std::mem::take(&mut self.terms) {
            f(&mut k);
            *out.entry(k).or_default() += z;
        }
        self.terms = out;
    }

    /// Flip bit `q` (0 = most significant) of `target` where all conditions hold.
    pub fn flag(&mut self, conds: &[(&str, u64)], target: &str, q: usize) {
        let conds: Vec<(usize, u64)> = conds.iter().map(|&(n, v)| (self.pos(n), v)).collect();
        let t = self.pos(target);
        let bit = 1u64 << (self.regs[t].1 - 1 - q);
        self.map_keys(|k| {
            if conds.iter().all(|&(p, v)| k[p] == v) {
                k[t] ^= bit;
            }
        });
    }

    /// Per-qubit equality marker, written as the product of the 00 and 11 flips.
    pub fn compare(&mut self, a: &str, b: &str, anc: &str) {
        let (pa, pb, pc) = (self.pos(a), self.pos(b), self.pos(anc));
        let w = self.regs[pa].1;
        self.map_keys(|k| {
            for j in 0..w {
                let bit = 1u64 << (w - 1 - j);
                if (k[pa] & bit == 0) == (k[pb] & bit == 0) {
                    k[pc] ^= bit;
                }
            }
        });
    }

    pub fn swap(&mut self, a: &str, b: &str, control: Option<(&str, usize)>) {
        let (pa, pb) = (self.pos(a), self.pos(b));
        let ctrl = control.map(|(n, q)| (self.pos(n), 1u64 << (self.regs[self.pos(n)].1 - 1 - q)));
        self.map_keys(|k| {
            if ctrl.is_none_or(|(p, bit)| k[p] & bit != 0) {
                k.swap(pa, pb);
            }
        });
    }

    pub fn hadamard(&mut self, reg: &str) {
        let p = self.pos(reg);
        let w = self.regs[p].1;
        for j in 0..w {
            let bit = 1u64 << j;
            let mut out: BTreeMap<Vec<u64>, Complex64> = BTreeMap::new();
            for (k, z) in std::mem::take(&mut self.terms) {
                let sign = if k[p] & bit == 0 { 1.0 } else { -1.0 };
                let mut k0 = k.clone();
                k0[p] &= !bit;
                let mut k1 = k;
                k1[p] |= bit;
                *out.entry(k0).or_default() += z * std::f64::consts::FRAC_1_SQRT_2;
                *out.entry(k1).or_default() += z * sign * std::f64::consts::FRAC_1_SQRT_2;
            }
            self.terms = out;
        }
    }

    pub fn norm(&self) -> f64 {
        self.terms
            .values()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Projects `reg` onto `value`, removes it, renormalizes; returns the probability.
    pub fn postselect(&mut self, reg: &str, value: u64) -> f64 {
        let p = self.pos(reg);
        let kept: BTreeMap<Vec<u64>, Complex64> = std::mem::take(&mut self.terms)
            .into_iter()
            .filter(|(k, _)| k[p] == value)
            .map(|(mut k, z)| {
                k.remove(p);
                (k, z)
            })
            .collect();
        self.regs.remove(p);
        let prob: f64 = kept.values().map(|z| z.norm_sqr()).sum();
        self.terms = kept
            .into_iter()
            .map(|(k, z)| (k, z / prob.sqrt()))
            .collect();
        prob
    }

    /// Asserts every nonzero term has `reg == value`, then drops it.
    pub fn release(&mut self, reg: &str, value: u64) {
        let p = self.pos(reg);
        for (k, z) in &self.terms {
            assert!(
                z.norm_sqr() < 1e-24 || k[p] == value,
                "{reg} not fixed to {value}"
            );
        }
        let prob = self.postselect(reg, value);
        assert!((prob - 1.0).abs() < 1e-10);
    }

    /// Matrix over (row, col) once every other register has been released.
    pub fn matrix(&self, row: &str, col: &str) -> ComplexMatrix {
        assert_eq!(self.regs.len(), 2);
        let (pr, pc) = (self.pos(row), self.pos(col));
        let (rows, cols) = (1usize << self.regs[pr].1, 1usize << self.regs[pc].1);
        let mut m = ComplexMatrix::zeros(rows, cols);
        for (k, z) in &self.terms {
            m[(k[pr] as usize, k[pc] as usize)] += z;
        }
        m
    }
}
