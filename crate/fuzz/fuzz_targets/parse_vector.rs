#![no_main]

use libfuzzer_sys::fuzz_target;
use ortho_core::text::parse_vector;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_vector(s) {
        let printed = v.to_string();
        assert_eq!(parse_vector(&printed).as_ref(), Ok(&v), "{printed}");
    }
});
