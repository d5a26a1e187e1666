//! Published case-study tables, transcribed as printed.

/// Aggregated rough comparison matrix, rows C1..C7.
pub const AGGREGATED_COMPARISON: &str = "\
C1 [1.000,1.000] [4.400,5.600] [3.056,3.611] [1.056,1.611] [1.878,3.472] [4.389,4.944] [7.889,8.778]\n\
C2 [0.185,0.242] [1.000,1.000] [0.352,0.537] [0.204,0.241] [0.204,0.241] [0.407,1.148] [3.489,5.222]\n\
C3 [0.293,0.330] [2.389,2.944] [1.000,1.000] [0.233,0.300] [0.407,1.148] [3.056,3.611] [5.222,6.111]\n\
C4 [0.796,0.982] [4.389,4.944] [3.500,4.500] [1.000,1.000] [3.056,3.611] [3.889,4.778] [7.500,8.500]\n\
C5 [0.361,0.722] [4.389,4.944] [2.185,2.926] [0.293,0.330] [1.000,1.000] [3.056,3.611] [4.778,6.511]\n\
C6 [0.204,0.241] [2.185,2.926] [0.293,0.330] [0.215,0.274] [0.293,0.330] [1.000,1.000] [3.056,3.611]\n\
C7 [0.115,0.129] [0.213,0.303] [0.168,0.194] [0.119,0.135] [0.159,0.234] [0.293,0.330] [1.000,1.000]\n\
";

/// Rough weights and max-normalized weights, C1..C7.
pub const WEIGHTS: &str = "\
raw [2.652,3.367] [0.452,0.643] [1.008,1.330] [2.716,3.168] [1.469,1.873] [0.590,0.692] [0.217,0.259]\n\
normalized [0.788,1.000] [0.134,0.191] [0.300,0.395] [0.807,0.941] [0.436,0.556] [0.175,0.205] [0.065,0.077]\n\
";

/// Initial rough decision matrix, A1..A9 x C1..C7.
pub const INITIAL: &str = "\
A1 [7.222,8.111] [5.222,6.111] [6.389,6.944] [6.500,6.944] [5.878,7.472] [6.389,6.944] [6.389,6.944]\n\
A2 [7.889,8.778] [5.889,6.778] [7.500,8.500] [7.889,8.778] [8.389,8.944] [6.389,6.944] [5.889,6.778]\n\
A3 [6.400,7.600] [6.778,8.556] [6.278,8.361] [8.389,8.944] [5.878,7.472] [5.056,5.611] [6.389,6.944]\n\
A4 [6.400,7.600] [5.222,6.111] [3.878,5.472] [5.500,6.500] [5.889,6.778] [5.056,5.611] [5.500,6.500]\n\
A5 [5.500,6.500] [5.889,6.778] [5.222,6.111] [5.056,5.611] [3.878,5.472] [3.489,5.222] [3.639,5.722]\n\
A6 [5.500,6.500] [5.500,6.500] [5.500,6.500] [5.056,5.611] [5.056,5.611] [5.500,6.500] [3.639,5.722]\n\
A7 [5.056,5.611] [5.889,6.778] [5.889,6.778] [5.222,6.111] [5.889,6.778] [6.389,6.944] [3.489,5.222]\n\
A8 [7.056,7.611] [5.500,6.500] [6.389,6.944] [5.222,6.111] [8.389,8.944] [3.639,5.722] [6.389,6.944]\n\
A9 [5.056,5.611] [5.889,6.778] [5.500,6.500] [7.000,7.000] [5.889,6.778] [5.500,6.500] [5.222,6.111]\n\
";

/// Normalized matrix.
pub const NORMALIZED: &str = "\
A1 [0.582,0.821] [0.000,0.267] [0.543,0.664] [0.343,0.486] [0.395,0.709] [0.839,1.000] [0.839,1.000]\n\
A2 [0.761,1.000] [0.200,0.467] [0.784,1.000] [0.729,0.957] [0.890,1.000] [0.839,1.000] [0.695,0.952]\n\
A3 [0.361,0.684] [0.467,1.000] [0.519,0.970] [0.857,1.000] [0.395,0.709] [0.453,0.614] [0.839,1.000]\n\
A4 [0.361,0.684] [0.000,0.267] [0.000,0.345] [0.114,0.371] [0.397,0.572] [0.453,0.614] [0.582,0.871]\n\
A5 [0.119,0.388] [0.200,0.467] [0.291,0.483] [0.000,0.143] [0.000,0.315] [0.000,0.502] [0.043,0.646]\n\
A6 [0.119,0.388] [0.083,0.383] [0.351,0.567] [0.000,0.143] [0.233,0.342] [0.582,0.871] [0.043,0.646]\n\
A7 [0.000,0.149] [0.200,0.467] [0.435,0.627] [0.043,0.271] [0.397,0.572] [0.839,1.000] [0.000,0.502]\n\
A8 [0.537,0.687] [0.083,0.383] [0.543,0.664] [0.043,0.271] [0.890,1.000] [0.043,0.646] [0.839,1.000]\n\
A9 [0.000,0.149] [0.200,0.467] [0.351,0.567] [0.500,0.500] [0.397,0.572] [0.582,0.871] [0.502,0.759]\n\
";

/// Weighted matrix.
pub const WEIGHTED: &str = "\
A1 [1.246,1.821] [0.134,0.242] [0.462,0.657] [1.083,1.398] [0.609,0.951] [0.323,0.411] [0.119,0.154]\n\
A2 [1.387,2.000] [0.161,0.280] [0.534,0.790] [1.394,1.841] [0.825,1.113] [0.323,0.411] [0.109,0.150]\n\
A3 [1.072,1.684] [0.197,0.382] [0.455,0.778] [1.498,1.882] [0.609,0.951] [0.255,0.332] [0.119,0.154]\n\
A4 [1.072,1.684] [0.134,0.242] [0.300,0.531] [0.899,1.290] [0.610,0.875] [0.255,0.332] [0.102,0.144]\n\
A5 [0.882,1.388] [0.161,0.280] [0.387,0.586] [0.807,1.075] [0.436,0.731] [0.175,0.308] [0.067,0.127]\n\
A6 [0.882,1.388] [0.145,0.264] [0.405,0.619] [0.807,1.075] [0.538,0.747] [0.277,0.384] [0.067,0.127]\n\
A7 [0.788,1.149] [0.161,0.280] [0.430,0.643] [0.841,1.196] [0.610,0.875] [0.323,0.411] [0.065,0.116]\n\
A8 [1.211,1.687] [0.145,0.264] [0.462,0.657] [0.841,1.196] [0.825,1.113] [0.183,0.338] [0.119,0.154]\n\
A9 [0.788,1.149] [0.161,0.280] [0.405,0.619] [1.210,1.411] [0.610,0.875] [0.277,0.384] [0.097,0.135]\n\
";

/// Border approximation area.
pub const BORDER: &str = "\
g [1.017,1.524] [0.155,0.277] [0.422,0.649] [1.014,1.347] [0.505,0.736] [0.260,0.366] [0.093,0.139]\n\
";

/// Signed distances from the border area, A1..A9 x C1..C7.
pub const DISTANCES: &str = "\
A1 0.375 -0.041 0.041 0.086 0.239 0.077 0.029\n\
A2 0.603 0.007 0.181 0.624 0.494 0.077 0.020\n\
A3 0.169 0.113 0.134 0.721 0.239 -0.035 0.029\n\
A4 0.169 -0.041 -0.170 -0.128 0.174 -0.035 0.010\n\
A5 -0.191 0.007 -0.072 -0.342 -0.069 -0.102 -0.029\n\
A6 -0.191 -0.016 -0.034 -0.342 0.035 0.026 -0.029\n\
A7 -0.439 0.007 0.010 -0.229 0.174 0.077 -0.037\n\
A8 0.253 -0.016 0.041 -0.229 0.494 -0.082 0.029\n\
A9 -0.439 0.007 -0.034 0.206 0.174 0.026 -0.006\n\
";

/// Final scores and ranks.
pub const SCORES: &str = "\
A1 0.807 3\n\
A2 2.006 1\n\
A3 1.371 2\n\
A4 -0.020 5\n\
A5 -0.797 9\n\
A6 -0.552 8\n\
A7 -0.437 7\n\
A8 0.492 4\n\
A9 -0.066 6\n\
";
