//! Elementary abelian groups: closed form, engine and the 5/3 ratio.

use chebotarev::decimal::to_f64;
use chebotarev::exact::{chebotarev, elementary_abelian_cheb, ExactOptions};
use chebotarev::spec::{GroupSpec, SpecKind};

fn main() -> chebotarev::Result<()> {
    for p in [2u64, 3, 5] {
        for d in 1..=3u32 {
            let closed = elementary_abelian_cheb(p, d)?;
            let g = GroupSpec::new(SpecKind::Elementary(p, d)).build()?;
            let engine = chebotarev(&g, &ExactOptions::default())?.exact;
            assert_eq!(closed, engine);
            let ratio = to_f64(&closed) / (g.order() as f64).sqrt();
            println!("C_{p}^{d}: {closed:<12} ratio {ratio:.5}");
        }
    }
    Ok(())
}
