//! Upper bounds next to the exact value.

use chebotarev::analysis::Analysis;
use chebotarev::exact::ExactOptions;
use chebotarev::report::Num;

fn show(n: &Option<Num>) -> String {
    n.as_ref().map_or("-".into(), |n| n.decimal.clone())
}

fn main() -> chebotarev::Result<()> {
    println!(
        "{:<22} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "group", "C(G)", "crown", "d(G)", "V-prop", "5/3 sqrt"
    );
    for text in [
        "cyclic 6",
        "symmetric 3",
        "symmetric 4",
        "alternating 4",
        "affine 5 1 [[2]]",
        "direct_product (cyclic 2) (alternating 4)",
    ] {
        let b = Analysis::new(&text.parse()?, ExactOptions::default())?.bound_report()?;
        println!(
            "{:<22} {:>10.10} {:>10.10} {:>10.10} {:>10.10} {:>10.10}",
            b.group_id,
            show(&b.exact),
            show(&b.thm2_bound),
            show(&b.cor36_bound),
            show(&b.v_property_bound),
            b.five_thirds_bound.decimal
        );
    }
    Ok(())
}
