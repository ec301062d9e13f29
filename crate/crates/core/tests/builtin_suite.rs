use std::time::Instant;

use htk_core::builtins::{self, BuiltinKind, BUILTINS};
use htk_core::suite::verify_galois;

#[test]
fn every_galois_builtin_passes_the_full_suite() {
    for b in BUILTINS.iter().filter(|b| b.kind == BuiltinKind::Galois) {
        let start = Instant::now();
        let d = builtins::galois(b.name).unwrap();
        let r = verify_galois(&d, None, None).unwrap();
        eprintln!(
            "{:<20} {:>4} verdicts {:?}",
            b.name,
            r.verdicts.len(),
            start.elapsed()
        );
        assert!(r.passed(), "{}:\n{r}", b.name);
    }
}
