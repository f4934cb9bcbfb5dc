use mirrorforge::genus1;
use mirrorforge_bench::genus_one_pipeline;

#[test]
fn pipeline_matches_closed_form() {
    let f1 = genus_one_pipeline(10).unwrap();
    assert_eq!(f1.truncate(10), genus1::f1_closed_twisted(10).unwrap());
}
