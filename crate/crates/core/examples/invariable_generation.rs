//! P_I(G, k): probability that k random elements invariably generate.

use chebotarev::analysis::Analysis;
use chebotarev::decimal::to_f64;
use chebotarev::exact::{invariable_gen_prob_with, ExactOptions};

fn main() -> chebotarev::Result<()> {
    let opts = ExactOptions::default();
    for text in ["symmetric 3", "symmetric 4", "alternating 5"] {
        let s = Analysis::new(&text.parse()?, opts)?.sieves()?;
        print!("{text:<14}");
        for k in 1..=5 {
            print!(" {:.4}", to_f64(&invariable_gen_prob_with(&s, k, &opts)?));
        }
        println!();
    }
    Ok(())
}
