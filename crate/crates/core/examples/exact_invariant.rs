//! Exact Chebotarev invariant of a group given on the command line.
//!
//! cargo run --example exact_invariant -- symmetric 4

use chebotarev::analysis::{method_name, Analysis};
use chebotarev::exact::ExactOptions;
use chebotarev::GroupSpec;

fn main() -> chebotarev::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = if args.is_empty() {
        "symmetric 4".to_string()
    } else {
        args.join(" ")
    };
    let spec: GroupSpec = text.parse()?;
    let a = Analysis::new(&spec, ExactOptions::default())?;
    let v = a.exact()?;
    println!("{} (order {})", spec, a.order());
    println!("C(G) = {} = {}", v.exact, v.decimal);
    println!("{} sieves, {}", v.sieve_count, method_name(v.method));
    for t in &v.terms {
        println!("  {:>6} / (1 - {})", t.coefficient, t.weight);
    }
    Ok(())
}
