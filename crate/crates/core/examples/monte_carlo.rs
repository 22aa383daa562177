//! Monte Carlo estimates against the exact value, for a few seeds.

use chebotarev::analysis::Analysis;
use chebotarev::decimal::to_f64;
use chebotarev::exact::ExactOptions;
use chebotarev::mc::mc_estimate;

fn main() -> chebotarev::Result<()> {
    for text in [
        "elementary 2 2",
        "symmetric 3",
        "alternating 4",
        "dihedral 6",
    ] {
        let a = Analysis::new(&text.parse()?, ExactOptions::default())?;
        let exact = to_f64(&a.exact()?.exact);
        let sieves = a.sieves()?;
        println!("{text}: exact {exact:.6}");
        for seed in 0..3 {
            let r = mc_estimate(&sieves, 20_000, seed)?;
            println!(
                "  seed {seed}: {:.4}  ci [{:.4}, {:.4}]  longest wait {}",
                r.mean, r.ci95.0, r.ci95.1, r.max_waiting_time
            );
        }
    }
    Ok(())
}
