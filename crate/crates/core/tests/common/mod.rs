#![allow(dead_code)]

pub mod oracle;
pub mod reference_tables;

use lisa_kit::analysis::{Analysis, Dataset};
use lisa_kit::fixtures::{load_bth, CensusYear};
use lisa_kit::matrices::Kernel;

pub fn bth(year: CensusYear) -> Analysis {
    let f = load_bth();
    let ds = Dataset::new("bth", f.distances.clone(), f.population(year).clone(), Kernel::InverseDistance)
        .expect("fixture dataset");
    Analysis::run(&ds).expect("fixture analysis")
}

/// Raw rows of a dataset's distance matrix, for the oracle.
pub fn distance_rows(ds: &Dataset) -> Vec<Vec<f64>> {
    (0..ds.n()).map(|i| ds.distances.row(i).to_vec()).collect()
}
