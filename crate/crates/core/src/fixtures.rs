//! Beijing-Tianjin-Hebei reference data: 13 cities, census populations for
//! 2000 and 2010 (in units of 10^4 persons) and the road-distance matrix
//! between them (km).
//!
//! The same data ships as `data/bth_distances.csv` and
//! `data/bth_population.csv`, which double as examples of the CSV formats.

use std::path::Path;

use crate::error::{Error, Result};
use crate::matrices::DistanceMatrix;
use crate::variables::AttributeVector;

pub const BTH_LABELS: [&str; 13] = [
    "Beijing",
    "Tianjin",
    "Shijiazhuang",
    "Tangshan",
    "Qinhuangdao",
    "Handan",
    "Xingtai",
    "Baoding",
    "Zhangjiakou",
    "Chengde",
    "Cangzhou",
    "Langfang",
    "Hengshui",
];

/// Road distance in km, full symmetric matrix in label order.
const BTH_DISTANCE_ROWS: [[f64; 13]; 13] = [
    [0.0, 160.8855, 321.7625, 185.4770, 288.9055, 479.9810, 430.2520, 187.1300, 198.1975, 194.5940, 233.4440, 83.2755, 299.7580],
    [160.8855, 0.0, 344.5825, 101.4105, 242.6355, 454.8400, 425.3890, 201.9420, 332.9375, 280.6470, 138.6135, 86.1555, 259.8555],
    [321.7625, 344.5825, 0.0, 423.7510, 568.1560, 167.2815, 114.0840, 138.9090, 430.8215, 506.6400, 221.7565, 283.2495, 142.5935],
    [185.4770, 101.4105, 423.7510, 0.0, 151.3880, 547.4205, 517.8910, 289.5120, 376.8000, 185.3500, 215.0285, 144.6130, 352.4360],
    [288.9055, 242.6355, 568.1560, 151.3880, 0.0, 711.7120, 662.2960, 433.9170, 481.3360, 222.2030, 375.5205, 292.9180, 508.4835],
    [479.9810, 454.8400, 167.2815, 547.4205, 711.7120, 0.0, 53.4600, 296.7465, 606.6940, 664.8585, 335.0465, 440.4685, 214.2995],
    [430.2520, 425.3890, 114.0840, 517.8910, 662.2960, 53.4600, 0.0, 245.8830, 557.3515, 615.1295, 299.4430, 391.1260, 167.0325],
    [187.1300, 201.9420, 138.9090, 289.5120, 433.9170, 296.7465, 245.8830, 0.0, 278.0950, 372.0075, 150.5130, 147.8300, 144.8405],
    [198.1975, 332.9375, 430.8215, 376.8000, 481.3360, 606.6940, 557.3515, 278.0950, 0.0, 372.8730, 411.7425, 257.5700, 455.2955],
    [194.5940, 280.6470, 506.6400, 185.3500, 222.2030, 664.8585, 615.1295, 372.0075, 372.8730, 0.0, 407.1040, 259.8085, 495.3555],
    [233.4440, 138.6135, 221.7565, 215.0285, 375.5205, 335.0465, 299.4430, 150.5130, 411.7425, 407.1040, 0.0, 149.7245, 140.0620],
    [83.2755, 86.1555, 283.2495, 144.6130, 292.9180, 440.4685, 391.1260, 147.8300, 257.5700, 259.8085, 149.7245, 0.0, 237.8790],
    [299.7580, 259.8555, 142.5935, 352.4360, 508.4835, 214.2995, 167.0325, 144.8405, 455.2955, 495.3555, 140.0620, 237.8790, 0.0],
];

pub const BTH_POP_2000: [f64; 13] = [949.6688, 531.3702, 193.0579, 140.3887, 70.7267, 107.1068, 53.6282, 90.2496, 79.6580, 32.5821, 44.3561, 29.5879, 24.5229];

pub const BTH_POP_2010: [f64; 13] = [1555.2378, 885.6234, 275.6871, 163.7579, 95.1872, 111.7417, 63.7797, 98.0177, 90.0218, 49.8293, 48.9701, 46.6539, 38.2976];

pub const DISTANCES_CSV: &str = include_str!("../data/bth_distances.csv");
pub const POPULATION_CSV: &str = include_str!("../data/bth_population.csv");

pub const DISTANCES_FILE: &str = "bth_distances.csv";
pub const POPULATION_FILE: &str = "bth_population.csv";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusYear {
    Y2000,
    Y2010,
}

impl CensusYear {
    pub fn column(&self) -> &'static str {
        match self {
            CensusYear::Y2000 => "2000",
            CensusYear::Y2010 => "2010",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BthFixture {
    pub distances: DistanceMatrix,
    pub pop2000: AttributeVector,
    pub pop2010: AttributeVector,
}

impl BthFixture {
    pub fn population(&self, year: CensusYear) -> &AttributeVector {
        match year {
            CensusYear::Y2000 => &self.pop2000,
            CensusYear::Y2010 => &self.pop2010,
        }
    }
}

fn labels() -> Vec<String> {
    BTH_LABELS.iter().map(|s| s.to_string()).collect()
}

pub fn load_bth() -> BthFixture {
    let rows = BTH_DISTANCE_ROWS.iter().map(|r| r.to_vec()).collect();
    // the embedded tables are checked by the tests below
    BthFixture {
        distances: DistanceMatrix::new(labels(), rows).expect("embedded distances are valid"),
        pop2000: AttributeVector::new(labels(), BTH_POP_2000.to_vec()).expect("embedded 2000 data"),
        pop2010: AttributeVector::new(labels(), BTH_POP_2010.to_vec()).expect("embedded 2010 data"),
    }
}

/// Writes the two fixture CSV files into `dir` and returns their paths.
pub fn export_csv(dir: &Path) -> Result<(std::path::PathBuf, std::path::PathBuf)> {
    let write = |name: &str, body: &str| {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
        Ok::<_, Error>(path)
    };
    Ok((write(DISTANCES_FILE, DISTANCES_CSV)?, write(POPULATION_FILE, POPULATION_CSV)?))
}
