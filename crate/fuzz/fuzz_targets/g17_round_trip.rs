#![no_main]
use libfuzzer_sys::fuzz_target;
use sagnac_cli::output::format_g17;

fuzz_target!(|data: [u8; 8]| {
    let x = f64::from_le_bytes(data);
    let text = format_g17(x);
    if !x.is_finite() {
        assert_eq!(text, "null");
        return;
    }
    let back: f64 = serde_json::from_str(&text).expect("valid JSON number");
    assert_eq!(back.to_bits(), x.to_bits(), "{x:e} -> {text}");
});
