use hbk_core::catalog::{Catalog, EntryReport, Outcome};

fn outcome(report: &EntryReport, field: &str) -> Outcome {
    report
        .checks
        .iter()
        .find(|c| c.field == field)
        .unwrap_or_else(|| panic!("no {field} check in {}", report.name))
        .outcome
}

#[test]
fn shipped_catalog_roundtrips_byte_for_byte() {
    let cat = Catalog::shipped();
    assert_eq!(cat.to_toml().unwrap(), Catalog::shipped_text());
}

#[test]
fn six_twelve_symmetry() {
    let r = Catalog::shipped().verify("6_12").unwrap();
    assert_eq!(outcome(&r, "symmetry_pos"), Outcome::Pass);
    assert_eq!(outcome(&r, "census"), Outcome::Pass);
    assert_eq!(r.failures(), 0);
}

#[test]
fn seven_fifty_nine_symmetry() {
    let r = Catalog::shipped().verify("7_59").unwrap();
    assert_eq!(outcome(&r, "symmetry_pos"), Outcome::Pass);
    assert_eq!(outcome(&r, "chirality"), Outcome::Pass);
    assert_eq!(r.failures(), 0);
}

#[test]
fn five_two_census_checked_symmetry_skipped() {
    let r = Catalog::shipped().verify("5_2").unwrap();
    assert_eq!(outcome(&r, "census"), Outcome::Pass);
    assert_eq!(outcome(&r, "symmetry_pos"), Outcome::Skip);
    assert_eq!(outcome(&r, "symmetry_full"), Outcome::Skip);
}

#[test]
fn unrecorded_fraction_census_is_skipped() {
    let cat = Catalog::shipped();
    for name in ["7_36", "7_38"] {
        let r = cat.verify(name).unwrap();
        assert_eq!(outcome(&r, "symmetry_pos"), Outcome::Pass, "{name}");
        assert_eq!(r.failures(), 0, "{name}");
    }
}

#[test]
fn shipped_catalog_verifies_clean() {
    let s = Catalog::shipped().verify_all();
    assert!(s.is_clean(), "{:#?}", s.reports);
    assert!(s.passed > 0);
    assert!(s.skipped_entries.contains(&"7_42".to_string()));
}

#[test]
fn wrong_fraction_is_caught() {
    let text = Catalog::shipped_text().replace(
        "spec = \"k:0;rational:x:2/5\"",
        "spec = \"k:0;rational:x:1/5\"",
    );
    assert_ne!(text, Catalog::shipped_text());
    let r = Catalog::from_toml(&text).unwrap().verify("6_12").unwrap();
    assert_eq!(outcome(&r, "census"), Outcome::Fail);
}

#[test]
fn added_one_over_seven_entry_verifies() {
    let mut text = Catalog::shipped_text().to_string();
    text.push_str(
        r#"
[[entry]]
name = "test_1_7"
spec = "k:0;rational:x:1/7"
figure_ref = "hand-built"
source = "test"

[entry.expected.census]
source = "slope formula"

[entry.expected.census.value]
count = "Two"
slopes = ["3/2", "-1/2"]
"#,
    );
    let cat = Catalog::from_toml(&text).unwrap();
    let r = cat.verify("test_1_7").unwrap();
    assert_eq!(outcome(&r, "census"), Outcome::Pass);
    assert!(cat.verify_all().is_clean());
}
