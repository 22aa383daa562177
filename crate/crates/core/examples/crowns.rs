//! Crown data of a few soluble groups.

use chebotarev::analysis::{crown_table, Analysis};
use chebotarev::exact::ExactOptions;

fn main() -> chebotarev::Result<()> {
    for text in [
        "symmetric 4",
        "affine 2 2 [[0,1],[1,1]] power 2",
        "direct_product (symmetric 3) (symmetric 3)",
        "quaternion8",
    ] {
        let a = Analysis::new(&text.parse()?, ExactOptions::default())?;
        let t = crown_table(&a.crowns()?);
        println!("{text}: chief length {}", t.chief_length);
        for c in &t.classes {
            println!(
                "  {:<10} q={} n={} delta={} |H|={} p_fix={} {}",
                c.label,
                c.q,
                c.n,
                c.delta,
                c.h_order,
                c.p_fix.rational,
                if c.central { "central" } else { "" }
            );
        }
        for e in &t.excluded {
            println!(
                "  factor {} of order {} has no complement",
                e.index, e.order
            );
        }
    }
    Ok(())
}
