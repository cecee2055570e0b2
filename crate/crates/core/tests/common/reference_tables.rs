//! Reference per-city values for the BTH dataset, four decimals unless more
//! are shown. Columns: set1, set2, set3,
//! set1/set2, set1/set3.
#![allow(dead_code)]

pub const MORAN_2000: [[f64; 5]; 13] = [
    [-2686.4966, -0.7067, -0.0612, 3801.3644, 43916.8725],
    [-387.0133, -0.0951, -0.0088, 4071.1117, 43916.8725],
    [-23.1481, -0.0068, -0.0005, 3385.2705, 43916.8725],
    [-121.7919, -0.0343, -0.0028, 3547.3310, 43916.8725],
    [-142.9763, -0.0607, -0.0033, 2356.2158, 43916.8725],
    [170.5561, 0.0533, 0.0039, 3202.3026, 43916.8725],
    [185.0124, 0.0511, 0.0042, 3618.1153, 43916.8725],
    [-92.0058, -0.0244, -0.0021, 3771.5181, 43916.8725],
    [-231.9379, -0.1057, -0.0053, 2194.2630, 43916.8725],
    [-363.3994, -0.1476, -0.0083, 2461.9446, 43916.8725],
    [-194.7349, -0.0538, -0.0044, 3620.4838, 43916.8725],
    [-1369.3138, -0.3073, -0.0312, 4455.7783, 43916.8725],
    [27.8793, 0.0081, 0.0006, 3431.1735, 43916.8725],
];
pub const MORAN_2010: [[f64; 5]; 13] = [
    [-7140.4536, -0.6690, -0.0579, 10673.67042, 123312.1000],
    [-1175.2192, -0.1028, -0.0095, 11431.08104, 123312.1000],
    [-14.4935, -0.0015, -0.0001, 9505.340198, 123312.1000],
    [-603.5770, -0.0606, -0.0049, 9960.382257, 123312.1000],
    [-379.2385, -0.0573, -0.0031, 6615.906335, 123312.1000],
    [594.8129, 0.0662, 0.0048, 8991.593275, 123312.1000],
    [637.3519, 0.0627, 0.0052, 10159.13409, 123312.1000],
    [-335.7750, -0.0317, -0.0027, 10589.86662, 123312.1000],
    [-708.7104, -0.1150, -0.0057, 6161.166944, 123312.1000],
    [-889.9662, -0.1287, -0.0072, 6912.777246, 123312.1000],
    [-561.9455, -0.0553, -0.0046, 10165.78443, 123312.1000],
    [-3399.6518, -0.2717, -0.0276, 12511.16811, 123312.1000],
    [120.3620, 0.0125, 0.0010, 9634.229089, 123312.1000],
];
pub const MORAN_SUM_2000: [f64; 5] = [-5229.3702, -1.4299, -0.1191, 43916.8725, 570919.3421];
pub const MORAN_SUM_2010: [f64; 5] = [-13856.5039, -1.3523, -0.1124, 123312.1000, 1603057.3005];
pub const MORAN_EXPECTED_2000: [f64; 5] = [-5229.3702, -1.5480, -0.1191, 43916.8725, 570919.3421];
pub const MORAN_EXPECTED_2010: [f64; 5] = [-13856.5039, -1.4608, -0.1124, 123312.1000, 1603057.3005];

pub const GEARY_2000: [[f64; 5]; 13] = [
    [41036.8054, 10.7953, 0.4313, 3801.3644, 95153.2237],
    [12819.0307, 3.1488, 0.1347, 4071.1117, 95153.2237],
    [2908.7705, 0.8592, 0.0306, 3385.2705, 95153.2237],
    [5340.6947, 1.5056, 0.0561, 3547.3310, 95153.2237],
    [3628.6681, 1.5400, 0.0381, 2356.2158, 95153.2237],
    [2044.0978, 0.6383, 0.0215, 3202.3026, 95153.2237],
    [2655.7337, 0.7340, 0.0279, 3618.1153, 95153.2237],
    [5080.6946, 1.3471, 0.0534, 3771.5181, 95153.2237],
    [4499.9163, 2.0508, 0.0473, 2194.2630, 95153.2237],
    [5353.0964, 2.1743, 0.0563, 2461.9446, 95153.2237],
    [5400.0965, 1.4915, 0.0568, 3620.4838, 95153.2237],
    [13324.4547, 2.9904, 0.1400, 4455.7783, 95153.2237],
    [4161.8231, 1.2129, 0.0437, 3431.1735, 95153.2237],
];
pub const GEARY_2010: [[f64; 5]; 13] = [
    [113754.5272, 10.6575, 0.4258, 10673.6704, 267176.2168],
    [37929.2182, 3.3181, 0.1420, 11431.0810, 267176.2168],
    [8029.3420, 0.8447, 0.0301, 9505.3402, 267176.2168],
    [15962.5572, 1.6026, 0.0597, 9960.3823, 267176.2168],
    [10073.4191, 1.5226, 0.0377, 6615.9063, 267176.2168],
    [5920.6445, 0.6585, 0.0222, 8991.5933, 267176.2168],
    [7227.0101, 0.7114, 0.0270, 10159.1341, 267176.2168],
    [14731.9805, 1.3911, 0.0551, 10589.8666, 267176.2168],
    [12851.4607, 2.0859, 0.0481, 6161.1669, 267176.2168],
    [14332.0819, 2.0733, 0.0536, 6912.7772, 267176.2168],
    [15101.1057, 1.4855, 0.0565, 10165.7844, 267176.2168],
    [35822.5797, 2.8632, 0.1341, 12511.1681, 267176.2168],
    [10946.6401, 1.1362, 0.0410, 9634.2291, 267176.2168],
];
pub const GEARY_SUM_2000: [f64; 5] = [108253.8824, 30.4883, 1.1377, 43916.8725, 1236991.9079];
pub const GEARY_SUM_2010: [f64; 5] = [302682.5671, 30.3506, 1.1329, 123312.1000, 3473290.8178];
pub const GEARY_EXPECTED_2000: [f64; 5] = [108253.8824, 32.0446, 1.1377, 43916.8725, 1236991.9079];
pub const GEARY_EXPECTED_2010: [f64; 5] = [302682.5671, 31.9099, 1.1329, 123312.1000, 3473290.8178];

/// Centralized and standardized populations: y, z, z* for 2000 then 2010.
pub const TRANSFORMS: [[f64; 6]; 13] = [
    [769.1377, 2.9976, 2.8800, 1284.2528, 2.9870, 2.8698],
    [350.8391, 1.3673, 1.3137, 614.6384, 1.4296, 1.3735],
    [12.5268, 0.0488, 0.0469, 4.7021, 0.0109, 0.0105],
    [-40.1424, -0.1564, -0.1503, -107.2271, -0.2494, -0.2396],
    [-109.8044, -0.4279, -0.4112, -175.7978, -0.4089, -0.3928],
    [-73.4243, -0.2862, -0.2749, -159.2433, -0.3704, -0.3558],
    [-126.9029, -0.4946, -0.4752, -207.2053, -0.4819, -0.4630],
    [-90.2815, -0.3519, -0.3381, -172.9673, -0.4023, -0.3865],
    [-100.8731, -0.3931, -0.3777, -180.9632, -0.4209, -0.4044],
    [-147.9490, -0.5766, -0.5540, -221.1557, -0.5144, -0.4942],
    [-136.1750, -0.5307, -0.5099, -222.0149, -0.5164, -0.4961],
    [-150.9432, -0.5883, -0.5652, -224.3311, -0.5218, -0.5013],
    [-156.0082, -0.6080, -0.5842, -232.6874, -0.5412, -0.5200],
];

/// Population standard deviations (sigma, s) for 2000 and 2010.
pub const SIGMA_2000: f64 = 256.5845;
pub const S_2000: f64 = 267.0616;
pub const SIGMA_2010: f64 = 429.9496;
pub const S_2010: f64 = 447.5057;
