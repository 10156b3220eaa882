use std::time::Instant;

use lapspec::enumerate::{enumerate_forms, EnumConfig, Family, FamilyQuery};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for n in 1..=max {
        let start = Instant::now();
        let forms = enumerate_forms(&FamilyQuery::new(Family::All, n), &EnumConfig::default()).unwrap();
        println!("n={n}: {} graphs in {:.2?}", forms.len(), start.elapsed());
    }
}
