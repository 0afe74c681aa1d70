use irredcert::acceptance::{self, CriterionReport};
use irredcert::Config;

fn report(r: CriterionReport) {
    println!("{r}");
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_1_value_factorization_replay() {
    report(acceptance::criterion1(&Config::default()));
}

#[test]
fn criterion_2_reciprocal_search() {
    report(acceptance::criterion2(&Config::default()));
}

#[test]
fn criterion_3_threshold_ladder() {
    report(acceptance::criterion3(&Config::default()));
}

#[test]
fn criterion_4_prime_power_bound() {
    report(acceptance::criterion4(&Config::default()));
}

#[test]
fn criterion_5_digit_polynomials() {
    report(acceptance::criterion5(&Config::default()));
}

#[test]
fn criterion_6_degree_eight_search() {
    report(acceptance::criterion6(&Config::default()));
}

#[test]
fn criterion_7_bivariate_pipeline() {
    report(acceptance::criterion7(&Config::default()));
}

#[test]
fn criterion_8_property_suites() {
    report(acceptance::criterion8(&Config::default()));
}
