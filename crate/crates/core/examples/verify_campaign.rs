// A small randomized campaign, its report, and the replay of one trial.

use std::error::Error;

use factorkit::harness::{replay_trial, verify_theorem, CampaignParams, TheoremId};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = CampaignParams::new(TheoremId::BiLarge, 20, 42);
    let report = verify_theorem(&params);
    print!("{}", report.to_text());
    if !report.hard_errors.is_empty() {
        return Err(format!("{} hard errors", report.hard_errors.len()).into());
    }

    // any row can be reproduced from its seed alone
    let row = &report.rows[7];
    assert_eq!(&replay_trial(&params, 7, row.seed), row);

    // equal parameters give byte-identical JSON
    assert_eq!(verify_theorem(&params).to_json(), report.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
