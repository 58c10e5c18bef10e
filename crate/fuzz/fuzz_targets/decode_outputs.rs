#![no_main]
use libfuzzer_sys::fuzz_target;
use sagnac_core::{
    concurrence, entanglement_entropy, schmidt_decompose, EntanglementReport, PureState2x2,
    SweepRow,
};

fuzz_target!(|data: &[u8]| {
    if let Ok(state) = serde_json::from_slice::<PureState2x2>(data) {
        let c = concurrence(&state);
        assert!((0.0..=1.0).contains(&c));
        let [hi, lo] = schmidt_decompose(&state);
        assert!(hi >= lo && lo >= 0.0);
        let s = entanglement_entropy(&state);
        assert!((0.0..=1.0 + 1e-12).contains(&s));
    }
    let _ = serde_json::from_slice::<EntanglementReport>(data);
    let _ = serde_json::from_slice::<Vec<SweepRow>>(data);
});
