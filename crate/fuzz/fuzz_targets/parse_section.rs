#![no_main]

use libfuzzer_sys::fuzz_target;
use ortho_core::text::{format_section, parse_section};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    for name in ["basis", "witness"] {
        if let Ok(vs) = parse_section(s, name) {
            let printed = format_section(name, &vs);
            assert_eq!(parse_section(&printed, name).as_ref(), Ok(&vs), "{printed}");
        }
    }
});
