//! Everything computed about one group, built on a shared subgroup lattice.

use num_rational::BigRational;
use num_traits::Zero;

use crate::bounds::{self, Verdict};
use crate::chief::{crown_data, omega_classes, omega_membership, CrownClass, Crowns};
use crate::decimal::int;
use crate::error::Result;
use crate::exact::{
    build_sieves, chebotarev_exact_with, v_property_sum, ChebValue, ExactOptions, Method,
    SieveSystem,
};
use crate::group::{ConjClassTable, PermGroup};
use crate::report::{
    BoundReport, CrownRecord, CrownTable, ExactBlock, ExcludedRecord, FactorBound, GroupInfo, Num,
    RatioRecord, Verdicts,
};
use crate::spec::GroupSpec;
use crate::subgroup::{maximal_classes, min_generators, MaximalClassData, SubgroupLattice};

pub struct Analysis {
    pub label: String,
    pub spec: String,
    pub group: PermGroup,
    pub soluble: bool,
    pub opts: ExactOptions,
    lattice: SubgroupLattice,
    classes: ConjClassTable,
    maximals: Vec<MaximalClassData>,
}

impl Analysis {
    pub fn new(spec: &GroupSpec, opts: ExactOptions) -> Result<Self> {
        Self::from_group(&spec.label, &spec.to_string(), spec.build()?, opts)
    }

    pub fn from_group(
        label: &str,
        spec: &str,
        group: PermGroup,
        opts: ExactOptions,
    ) -> Result<Self> {
        let lattice = SubgroupLattice::new(&group)?;
        let maximals = if group.is_trivial() {
            Vec::new()
        } else {
            maximal_classes(&group, &lattice)?
        };
        Ok(Analysis {
            label: label.to_string(),
            spec: spec.to_string(),
            soluble: group.is_soluble(),
            classes: group.conjugacy_classes(),
            group,
            opts,
            lattice,
            maximals,
        })
    }

    pub fn order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn maximals(&self) -> &[MaximalClassData] {
        &self.maximals
    }

    pub fn info(&self) -> GroupInfo {
        GroupInfo {
            label: self.label.clone(),
            spec: self.spec.clone(),
            order: self.order(),
            soluble: self.soluble,
        }
    }

    pub fn sieves(&self) -> Result<SieveSystem> {
        build_sieves(&self.group, &self.classes, &self.maximals)
    }

    pub fn exact(&self) -> Result<ChebValue> {
        if self.group.is_trivial() {
            return Ok(ChebValue::trivial());
        }
        chebotarev_exact_with(&self.sieves()?, &self.opts)
    }

    pub fn crowns(&self) -> Result<Crowns> {
        crown_data(&self.group, &self.lattice)
    }

    pub fn min_generators(&self) -> usize {
        min_generators(&self.group)
    }

    /// `Σ_k P*_{G,V}(k)` over the maximal classes in `Ω_{G,V}`.
    pub fn v_property_sum(&self, class: &CrownClass) -> Result<BigRational> {
        let omega = omega_membership(&self.group, &self.lattice, &self.maximals, &class.module)?;
        let chosen = omega_classes(&self.maximals, &omega);
        v_property_sum(&self.group, &self.classes, &chosen, &self.opts)
    }

    pub fn bound_report(&self) -> Result<BoundReport> {
        let exact = self.exact()?.exact;
        let order = self.order();
        let five = bounds::five_thirds_check(&exact, order, self.is_klein());
        let five_thirds_bound = Num::from(&bounds::five_thirds_value(order));
        let d_g = self.min_generators();

        if !self.soluble {
            return Ok(BoundReport {
                group_id: self.label.clone(),
                order,
                exact: Some(Num::from(&exact)),
                d_g,
                thm2_bound: None,
                cor36_bound: None,
                v_property_bound: None,
                five_thirds_bound,
                five_thirds_equality: five.equality,
                per_factor: Vec::new(),
                verdicts: Verdicts {
                    thm2: Verdict::NotApplicable,
                    cor36: Verdict::NotApplicable,
                    five_thirds: Verdict::NotApplicable,
                    v_property: Verdict::NotApplicable,
                },
            });
        }

        let crowns = self.crowns()?;
        let thm2 = bounds::theorem2_bound(&crowns.a, &crowns.b);
        let cor36 = bounds::corollary36_effective(&crowns.a, d_g);
        let v_property =
            v_property_total(self, &crowns)? + int(crowns.max_central_delta()) + bounds::sigma();

        let per_factor = crowns
            .classes()
            .map(|c| {
                let alpha = bounds::alpha_u(c);
                let (ratio_check, ratio_error) = if c.central() {
                    (None, None)
                } else {
                    match bounds::lemma51_check(c, order) {
                        Ok(l) => (
                            Some(RatioRecord {
                                ratio: l.ratio,
                                threshold: l.threshold,
                                passes: l.passes,
                                exceptional_case: l.exceptional_case,
                                lambda: l.lambda.to_string(),
                            }),
                            None,
                        ),
                        Err(e) => (None, Some(e.to_string())),
                    }
                };
                FactorBound {
                    label: factor_label(c),
                    central: c.central(),
                    branch1: alpha.branch1.as_ref().map(Num::from),
                    branch2: Num::from(&alpha.branch2),
                    value: Num::from(&alpha.value),
                    ratio_check,
                    ratio_error,
                }
            })
            .collect();

        Ok(BoundReport {
            group_id: self.label.clone(),
            order,
            exact: Some(Num::from(&exact)),
            d_g,
            verdicts: Verdicts {
                thm2: bounds::check_upper(&exact, &thm2),
                cor36: bounds::check_upper(&exact, &cor36),
                five_thirds: five.verdict,
                v_property: bounds::check_upper(&exact, &v_property),
            },
            thm2_bound: Some(Num::from(&thm2)),
            cor36_bound: Some(Num::from(&cor36)),
            v_property_bound: Some(Num::from(&v_property)),
            five_thirds_bound,
            five_thirds_equality: five.equality,
            per_factor,
        })
    }

    /// `C_2 × C_2`, recognised by order and exponent.
    pub fn is_klein(&self) -> bool {
        self.group.order() == 4 && self.group.exponent() == 2
    }
}

pub fn factor_label(c: &CrownClass) -> String {
    format!("F_{}^{} @{}", c.p(), c.n_raw(), c.first_index)
}

pub fn exact_block(v: &ChebValue) -> ExactBlock {
    ExactBlock {
        value: Num::from(&v.exact),
        term_count: v.terms.len(),
        sieve_count: v.sieve_count,
        method: method_name(v.method).into(),
    }
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::Trivial => "trivial",
        Method::GrayCode => "gray-code",
        Method::Lattice => "intersection-lattice",
    }
}

pub fn crown_table(c: &Crowns) -> CrownTable {
    CrownTable {
        chief_length: c.series.len(),
        classes: c
            .classes()
            .map(|v| CrownRecord {
                label: factor_label(v),
                p: v.p(),
                n_raw: v.n_raw(),
                q: v.q,
                n: v.n,
                delta: v.delta,
                theta: v.theta,
                central: v.central(),
                h_order: v.h_order(),
                p_fix: Num::from(&v.module.p_fix),
                m: v.m,
                iso_heuristic: v.iso_heuristic,
            })
            .collect(),
        excluded: c
            .excluded
            .iter()
            .map(|o| ExcludedRecord {
                index: o.index,
                order: o.order,
                abelian: o.abelian,
                complemented: o.complemented,
            })
            .collect(),
    }
}

/// `Σ_{V∈A} v_property_sum(Ω_{G,V})`, zero when `A` is empty.
pub fn v_property_total(a: &Analysis, crowns: &Crowns) -> Result<BigRational> {
    crowns
        .a
        .iter()
        .try_fold(BigRational::zero(), |acc, c| Ok(acc + a.v_property_sum(c)?))
}
