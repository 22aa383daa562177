#![allow(dead_code)]

use chebotarev::analysis::Analysis;
use chebotarev::catalog;
use chebotarev::exact::ExactOptions;
use chebotarev::spec::GroupSpec;

pub fn spec(text: &str) -> GroupSpec {
    text.parse().unwrap()
}

pub fn analysis(text: &str) -> Analysis {
    Analysis::new(&spec(text), ExactOptions::default()).unwrap()
}

/// Soluble catalog entries up to the given order.
pub fn catalog_upto(max_order: usize) -> Vec<GroupSpec> {
    catalog::soluble_catalog()
        .into_iter()
        .filter(|s| s.build().unwrap().order() <= max_order)
        .collect()
}
