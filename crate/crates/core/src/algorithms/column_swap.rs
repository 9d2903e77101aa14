use super::{check_columns, AlgorithmResult, Simulator, Trace};
use crate::gates::{
    controlled_swap_registers, hadamard_on_registers, pattern_flag, postselect, ControlCondition,
};
use crate::qstate::{tensor, ComplexMatrix, EncodedMatrix, QState, RegisterLayout};
use crate::{GateStats, Result};

impl Simulator {
    /// Exchanges columns `k` and `l` of `a` (0-based).
    ///
    /// The auxiliary pair `R2 C2` starts in
    /// `(|l>|k> + |k>|k> + |l>|l>)/√3`. `B1` tags the `|l>|k>` branch; the
    /// two qubits of `B2` pick column `k` out of the `|l>|l>` branch and
    /// column `l` out of the `|k>|k>` branch, and controlled swaps
    /// (`C1 <-> C2` on the first qubit, `C1 <-> R2` on the second) move
    /// every useful term onto `R2 C2 = |l>|k>`. `B3` tags the three useful
    /// flag patterns `B1 B2 ∈ {1 00, 0 01, 0 10}`, a Hadamard layer on
    /// `B1 B2` overlaps them, and `B4` marks `B1 B2 B3 = 0 00 1`.
    /// Post-selection succeeds with probability `1/24` whatever the input.
    pub fn column_swap(&self, a: &ComplexMatrix, k: usize, l: usize) -> Result<AlgorithmResult> {
        check_columns(a, k, l)?;
        let (n, m) = a.qubit_dims()?;
        self.reserve(n + 3 * m + 5)?;
        let ea = self.encode(a, "R1", "C1")?;
        let (k64, l64) = (k as u64, l as u64);

        let aux_layout = RegisterLayout::new(&[("R2", m), ("C2", m)])?;
        let mut aux = alloc::vec![num_complex::Complex64::new(0.0, 0.0); aux_layout.dim()];
        for (r, c) in [(l64, k64), (k64, k64), (l64, l64)] {
            aux[aux_layout.index_of(&[("R2", r), ("C2", c)])?] =
                num_complex::Complex64::new(1.0, 0.0);
        }
        let aux = QState::normalized(aux_layout, aux)?;

        let mut trace = Trace::default();
        let mut stats = GateStats::default();

        let state = tensor(&ea.state, &aux)?;
        trace.record("Phi0", &state);

        let mut state = state.append_ancilla("B1", 1, 0)?;
        let lk = [
            ControlCondition::new("R2", l64),
            ControlCondition::new("C2", k64),
        ];
        stats += pattern_flag(&mut state, &lk, "B1", 0)?;
        trace.record_masses("Phi1", &state, &[("B1=1", &[("B1", 1)])])?;

        // the two flags share C1, so they occupy separate layers
        let mut state = state.append_ancilla("B2", 2, 0)?;
        let col_k = [
            ControlCondition::new("C1", k64),
            ControlCondition::new("R2", l64),
        ];
        stats += pattern_flag(&mut state, &col_k, "B2", 0)?;
        let col_l = [
            ControlCondition::new("C1", l64),
            ControlCondition::new("C2", k64),
        ];
        stats += pattern_flag(&mut state, &col_l, "B2", 1)?;
        trace.record_masses(
            "Phi2",
            &state,
            &[("B2=10", &[("B2", 0b10)]), ("B2=01", &[("B2", 0b01)])],
        )?;

        stats += controlled_swap_registers(&mut state, "C1", "C2", "B2", 0)?;
        stats += controlled_swap_registers(&mut state, "C1", "R2", "B2", 1)?;
        trace.record("Phi3", &state);

        let mut state = state.append_ancilla("B3", 1, 0)?;
        for (b1, b2) in [(1, 0b00), (0, 0b01), (0, 0b10)] {
            let tag = [
                ControlCondition::new("B1", b1),
                ControlCondition::new("B2", b2),
            ];
            stats += pattern_flag(&mut state, &tag, "B3", 0)?;
        }
        trace.record_masses("Phi4", &state, &[("B3=1", &[("B3", 1)])])?;

        stats += hadamard_on_registers(&mut state, &["B1", "B2"])?;
        trace.record("Phi5", &state);

        let mut state = state.append_ancilla("B4", 1, 0)?;
        let useful = [
            ControlCondition::new("B1", 0),
            ControlCondition::new("B2", 0),
            ControlCondition::new("B3", 1),
        ];
        stats += pattern_flag(&mut state, &useful, "B4", 0)?;
        trace.record_masses("Phi6", &state, &[("B4=1", &[("B4", 1)])])?;

        let (state, probability) = postselect(&state, "B4", 1)?;
        trace.record("Phi7", &state);

        let state = state
            .release("R2", l64)?
            .release("C2", k64)?
            .release("B1", 0)?
            .release("B2", 0)?
            .release("B3", 1)?;

        Ok(AlgorithmResult {
            output: EncodedMatrix {
                state,
                row_reg: "R1".into(),
                col_reg: "C1".into(),
                scale: ea.scale,
            },
            success_probability: probability,
            stats,
            stage_trace: trace.records,
        })
    }
}
