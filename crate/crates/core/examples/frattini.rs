//! C(G) only sees G/Phi(G).

use chebotarev::exact::{chebotarev, frattini_reduce, ExactOptions};

fn main() -> chebotarev::Result<()> {
    let opts = ExactOptions::default();
    for spec in chebotarev::catalog::frattini_catalog() {
        let g = spec.build()?;
        let q = frattini_reduce(&g)?;
        println!(
            "{:<4} |G|={:<2} |G/Phi|={:<2} C(G)={} C(G/Phi)={}",
            spec.label,
            g.order(),
            q.order(),
            chebotarev(&g, &opts)?.exact,
            chebotarev(&q, &opts)?.exact
        );
    }
    Ok(())
}
