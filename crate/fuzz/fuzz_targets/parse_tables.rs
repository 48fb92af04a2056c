#![no_main]

use libfuzzer_sys::fuzz_target;
use ortho_core::constructions::parse_tables;
use ortho_core::IntVector;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(tables) = parse_tables(s) else { return };
    let printed: String = tables.iter().map(|t| t.to_string()).collect();
    assert_eq!(parse_tables(&printed).as_ref(), Ok(&tables));
    for t in &tables {
        // generators are signed permutations, so they preserve the norm
        let v = IntVector::new((1..=t.dimension() as i64).map(Into::into).collect());
        for g in 0..t.generators().len() {
            assert_eq!(t.apply(g, &v).norm_sq(), v.norm_sq());
        }
    }
});
