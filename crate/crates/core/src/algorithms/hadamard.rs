use num_traits::Float;

use super::{AlgorithmResult, Simulator, Trace};
use crate::gates::{
    compare_registers_mark, hadamard_on_registers, pattern_flag, postselect, ControlCondition,
};
use crate::qstate::{tensor, ComplexMatrix, EncodedMatrix};
use crate::{Error, GateStats, Result};

impl Simulator {
    /// Entrywise (Schur) product `A ∘ B` of two `2^n x 2^m` matrices.
    ///
    /// Registers: `R1 C1` hold `A`, `R2 C2` hold `B`. `B1` (n qubits) marks
    /// equal rows, `B2` (m qubits) equal columns, `B3` tags the diagonal
    /// terms, and after a Hadamard layer on `R2 C2` the flag `B4` selects
    /// the branch with `R2 = C2 = 0`. Post-selecting `B4 = 1` succeeds with
    /// probability `G^2 / 2^(n+m)`, `G` being the Frobenius norm of the
    /// product of the normalized inputs.
    pub fn hadamard_product(
        &self,
        a: &ComplexMatrix,
        b: &ComplexMatrix,
    ) -> Result<AlgorithmResult> {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "hadamard product of {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        let (n, m) = a.qubit_dims()?;
        self.reserve(3 * (n + m) + 2)?;
        let ea = self.encode(a, "R1", "C1")?;
        let eb = self.encode(b, "R2", "C2")?;
        let (row_all, col_all) = ((1u64 << n) - 1, (1u64 << m) - 1);

        let mut trace = Trace::default();
        let mut stats = GateStats::default();

        let state = tensor(&ea.state, &eb.state)?;
        trace.record("Phi0", &state);

        let mut state = state.append_ancilla("B1", n, 0)?;
        stats += compare_registers_mark(&mut state, "R1", "R2", "B1")?;
        trace.record_masses("Phi1", &state, &[("B1=N-1", &[("B1", row_all)])])?;

        let mut state = state.append_ancilla("B2", m, 0)?;
        stats += compare_registers_mark(&mut state, "C1", "C2", "B2")?;
        trace.record_masses(
            "Phi2",
            &state,
            &[("B1=N-1,B2=M-1", &[("B1", row_all), ("B2", col_all)])],
        )?;

        let mut state = state.append_ancilla("B3", 1, 0)?;
        let diagonal = [
            ControlCondition::new("B1", row_all),
            ControlCondition::new("B2", col_all),
        ];
        stats += pattern_flag(&mut state, &diagonal, "B3", 0)?;
        trace.record_masses("Phi3", &state, &[("B3=1", &[("B3", 1)])])?;

        stats += hadamard_on_registers(&mut state, &["R2", "C2"])?;
        trace.record("Phi4", &state);

        let mut state = state.append_ancilla("B4", 1, 0)?;
        let useful = [
            ControlCondition::new("R2", 0),
            ControlCondition::new("C2", 0),
            ControlCondition::new("B1", row_all),
            ControlCondition::new("B2", col_all),
            ControlCondition::new("B3", 1),
        ];
        stats += pattern_flag(&mut state, &useful, "B4", 0)?;
        trace.record_masses("Phi5", &state, &[("B4=1", &[("B4", 1)])])?;

        let (state, probability) = postselect(&state, "B4", 1)?;
        trace.record("Phi6", &state);

        let state = state
            .release("R2", 0)?
            .release("C2", 0)?
            .release("B1", row_all)?
            .release("B2", col_all)?
            .release("B3", 1)?;

        // probability = G^2 / 2^(n+m)
        let g = Float::sqrt(probability * (1u64 << (n + m)) as f64);
        Ok(AlgorithmResult {
            output: EncodedMatrix {
                state,
                row_reg: "R1".into(),
                col_reg: "C1".into(),
                scale: ea.scale * eb.scale * g,
            },
            success_probability: probability,
            stats,
            stage_trace: trace.records,
        })
    }
}
