use alloc::vec;

use num_complex::Complex64;
use num_traits::Float;

use super::{check_columns, AlgorithmResult, Simulator, Trace};
use crate::gates::{
    controlled_swap_registers, hadamard_on_registers, pattern_flag, postselect, ControlCondition,
};
use crate::qstate::{tensor, ComplexMatrix, EncodedMatrix, QState, RegisterLayout};
use crate::{GateStats, Result};

impl Simulator {
    /// Adds column `k` of `a` to column `l` (0-based).
    ///
    /// The auxiliary register `C2` starts in `(|k> + |l>)/√2`. Flags `B1`
    /// (set on the `|k>` branch) and `B2` (column `k` inside the `|l>`
    /// branch) steer a controlled swap of `C1` and `C2`, moving column `k`
    /// onto column `l`. `B3` tags the leftovers, a Hadamard layer on `B1 B2`
    /// overlaps the two useful branches, and `B4` marks `B1 B2 B3 = 000`.
    /// Post-selection succeeds with probability `G^2 / 8`.
    pub fn column_add(&self, a: &ComplexMatrix, k: usize, l: usize) -> Result<AlgorithmResult> {
        check_columns(a, k, l)?;
        let (n, m) = a.qubit_dims()?;
        self.reserve(n + 2 * m + 4)?;
        let ea = self.encode(a, "R1", "C1")?;
        let k64 = k as u64;

        let mut aux = vec![Complex64::new(0.0, 0.0); 1 << m];
        aux[k] = Complex64::new(1.0, 0.0);
        aux[l] = Complex64::new(1.0, 0.0);
        let aux = QState::normalized(RegisterLayout::new(&[("C2", m)])?, aux)?;

        let mut trace = Trace::default();
        let mut stats = GateStats::default();

        let state = tensor(&ea.state, &aux)?;
        trace.record("Phi0", &state);

        let mut state = state.append_ancilla("B1", 1, 0)?;
        stats += pattern_flag(&mut state, &[ControlCondition::new("C2", k64)], "B1", 0)?;
        trace.record_masses("Phi1", &state, &[("B1=1", &[("B1", 1)])])?;

        let mut state = state.append_ancilla("B2", 1, 0)?;
        let pick = [
            ControlCondition::new("C1", k64),
            ControlCondition::new("B1", 0),
        ];
        stats += pattern_flag(&mut state, &pick, "B2", 0)?;
        trace.record_masses("Phi2", &state, &[("B2=1", &[("B2", 1)])])?;

        stats += controlled_swap_registers(&mut state, "C1", "C2", "B2", 0)?;
        trace.record("Phi3", &state);

        let mut state = state.append_ancilla("B3", 1, 0)?;
        let garbage = [
            ControlCondition::new("B1", 0),
            ControlCondition::new("B2", 0),
        ];
        stats += pattern_flag(&mut state, &garbage, "B3", 0)?;
        trace.record_masses("Phi4", &state, &[("B3=0", &[("B3", 0)])])?;

        stats += hadamard_on_registers(&mut state, &["B1", "B2"])?;
        trace.record("Phi5", &state);

        let mut state = state.append_ancilla("B4", 1, 0)?;
        let useful = [
            ControlCondition::new("B1", 0),
            ControlCondition::new("B2", 0),
            ControlCondition::new("B3", 0),
        ];
        stats += pattern_flag(&mut state, &useful, "B4", 0)?;
        trace.record_masses("Phi6", &state, &[("B4=1", &[("B4", 1)])])?;

        let (state, probability) = postselect(&state, "B4", 1)?;
        trace.record("Phi7", &state);

        let state = state
            .release("C2", k64)?
            .release("B1", 0)?
            .release("B2", 0)?
            .release("B3", 0)?;

        // probability = G^2 / 8
        let g = Float::sqrt(8.0 * probability);
        Ok(AlgorithmResult {
            output: EncodedMatrix {
                state,
                row_reg: "R1".into(),
                col_reg: "C1".into(),
                scale: ea.scale * g,
            },
            success_probability: probability,
            stats,
            stage_trace: trace.records,
        })
    }
}
