//! Runs the fixed regression checks over the built-in catalogs.

use chebotarev::exact::ExactOptions;
use chebotarev::verify;

fn main() {
    let items = verify::run(ExactOptions::default());
    for i in &items {
        println!(
            "{} {:>2} {}: {}",
            if i.passed { "PASS" } else { "FAIL" },
            i.id,
            i.name,
            i.detail
        );
    }
    let failed = items.iter().filter(|i| !i.passed).count();
    if failed > 0 {
        std::process::exit(1);
    }
}
