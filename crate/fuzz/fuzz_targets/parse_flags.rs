#![no_main]
use libfuzzer_sys::fuzz_target;
use sagnac_cli::{parse_flags, run, Command};

// One argument per line.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let argv: Vec<&str> = std::iter::once("sagnac").chain(text.lines()).collect();
    let Ok(cli) = parse_flags(argv.iter().copied()) else {
        return;
    };
    if let Command::Sweep(a) = &cli.command {
        if a.count > 4096 {
            return;
        }
    }
    let out = run(argv);
    assert!(
        out.code == 0 || out.stdout.is_empty(),
        "stdout written on failure"
    );
    assert!(
        matches!(out.code, 0 | 1),
        "parsed flags must not produce a usage error"
    );
});
