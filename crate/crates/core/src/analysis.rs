//! End-to-end pipeline from raw distances and values to every statistic.

use crate::error::Result;
use crate::global::GlobalStats;
use crate::lisa::LisaTable;
use crate::matrices::{
    build_contiguity, normalize_global, normalize_row, ContiguityMatrix, DistanceMatrix,
    GlobalWeights, Kernel, RowWeights,
};
use crate::variables::{transform, AttributeVector, TransformSet};

/// Distances, attribute values and the kernel that links them.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: String,
    pub distances: DistanceMatrix,
    pub values: AttributeVector,
    pub kernel: Kernel,
}

impl Dataset {
    pub fn new(
        name: impl Into<String>,
        distances: DistanceMatrix,
        values: AttributeVector,
        kernel: Kernel,
    ) -> Result<Self> {
        values.check_labels(distances.labels())?;
        kernel.validate()?;
        Ok(Self {
            name: name.into(),
            distances,
            values,
            kernel,
        })
    }

    pub fn with_kernel(mut self, kernel: Kernel) -> Result<Self> {
        kernel.validate()?;
        self.kernel = kernel;
        Ok(self)
    }

    pub fn with_values(mut self, values: AttributeVector) -> Result<Self> {
        values.check_labels(self.distances.labels())?;
        self.values = values;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.distances.n()
    }
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub labels: Vec<String>,
    pub contiguity: ContiguityMatrix,
    pub global_weights: GlobalWeights,
    pub row_weights: RowWeights,
    pub transforms: TransformSet,
    pub globals: GlobalStats,
    pub lisa: LisaTable,
}

impl Analysis {
    pub fn run(dataset: &Dataset) -> Result<Self> {
        let labels = dataset.distances.labels().to_vec();
        let contiguity = build_contiguity(&dataset.distances, dataset.kernel)?;
        let global_weights = normalize_global(&contiguity);
        let row_weights = normalize_row(&contiguity)?;
        let transforms = transform(&dataset.values)?;
        let globals = GlobalStats::compute(&global_weights, &transforms)?;
        let lisa = LisaTable::compute(&labels, &contiguity, &global_weights, &row_weights, &transforms)?;
        Ok(Self {
            labels,
            contiguity,
            global_weights,
            row_weights,
            transforms,
            globals,
            lisa,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// `V0`
    pub fn v0(&self) -> f64 {
        self.contiguity.total()
    }

    /// `gamma = sigma^2 V0`, the factor from MI3 to MI1.
    pub fn gamma(&self) -> f64 {
        self.transforms.sigma2 * self.v0()
    }

    /// `gamma_c = 2 n V0 / (n - 1)`.
    pub fn gamma_c(&self) -> f64 {
        let n = self.n() as f64;
        2.0 * n * self.v0() / (n - 1.0)
    }
}
