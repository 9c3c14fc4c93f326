// Embedded reference dataset: Atari100k mean raw scores, per-seed HNS,
// averaged-agent scores, task features, and printed per-game HNS values.
// Generated from the published benchmark tables; do not edit by hand.
#include "asymbench/embedded.hpp"

namespace asymbench::embedded::detail {

const GameMetaRow kGameMeta[kNumGames] = {
    {"Boxing", 0.1, 12.1, 18, false},
    {"Krull", 1598.0, 2665.5, 18, false},
    {"CrazyClimber", 10780.5, 35829.4, 9, false},
    {"Gopher", 257.6, 2412.5, 8, false},
    {"RoadRunner", 11.5, 7845.0, 18, false},
    {"Jamesbond", 29.0, 302.8, 18, true},
    {"Assault", 222.4, 742.0, 7, true},
    {"Breakout", 1.7, 30.5, 4, false},
    {"KungFuMaster", 258.5, 22736.3, 14, false},
    {"Pong", -20.7, 14.6, 6, false},
    {"Kangaroo", 52.0, 3035.0, 18, false},
    {"UpNDown", 533.4, 11693.2, 6, false},
    {"Freeway", 0.0, 29.6, 3, false},
    {"BankHeist", 14.2, 753.1, 18, true},
    {"DemonAttack", 152.1, 1971.0, 6, true},
    {"Hero", 1027.0, 30826.4, 18, true},
    {"BattleZone", 2360.0, 37187.5, 18, true},
    {"Frostbite", 65.2, 4334.7, 18, false},
    {"Qbert", 163.9, 13455.0, 6, false},
    {"MsPacman", 307.3, 6951.6, 9, false},
    {"Asterix", 210.0, 8503.3, 9, false},
    {"ChopperCommand", 811.0, 7387.8, 18, true},
    {"Amidar", 5.8, 1719.5, 10, false},
    {"Alien", 227.8, 7127.7, 18, true},
    {"PrivateEye", 24.9, 69571.3, 18, false},
    {"Seaquest", 68.4, 42054.7, 18, true},
};

const char* const kFullMethods[kNumFullMethods] = {
    "Random", "Human", "SimPLE", "TWM", "IRIS", "DreamerV3", "STORM", "DIAMOND", "JEDI"
};

// kFullScores[method][game], raw game points.
const double kFullScores[kNumFullMethods][kNumGames] = {
    {0.1, 1598.0, 10780.5, 257.6, 11.5, 29.0, 222.4, 1.7, 258.5, -20.7, 52.0, 533.4, 0.0, 14.2, 152.1, 1027.0, 2360.0, 65.2, 163.9, 307.3, 210.0, 811.0, 5.8, 227.8, 24.9, 68.4},  // Random
    {12.1, 2665.5, 35829.4, 2412.5, 7845.0, 302.8, 742.0, 30.5, 22736.3, 14.6, 3035.0, 11693.2, 29.6, 753.1, 1971.0, 30826.4, 37187.5, 4334.7, 13455.0, 6951.6, 8503.3, 7387.8, 1719.5, 7127.7, 69571.3, 42054.7},  // Human
    {7.8, 2204.8, 62583.6, 596.8, 5640.6, 100.5, 527.2, 16.4, 14862.5, 12.8, 51.2, 3350.3, 16.7, 34.2, 208.1, 2656.6, 4031.2, 236.9, 1288.8, 1480.0, 1128.3, 979.4, 74.3, 616.9, 35.0, 683.3},  // SimPLE
    {77.5, 6349.2, 71820.4, 1674.8, 9109.0, 362.4, 682.6, 20.0, 24554.6, 18.8, 1240.0, 15981.7, 24.3, 466.7, 350.2, 7254.0, 5068.0, 1475.6, 3330.8, 1588.4, 1116.6, 1697.4, 121.8, 674.6, 86.6, 774.4},  // TWM
    {70.1, 6616.4, 59324.2, 2236.1, 9614.6, 462.7, 1524.4, 83.7, 21759.8, 14.6, 838.2, 3546.2, 31.1, 53.1, 2034.4, 7037.4, 13074.0, 259.1, 745.7, 999.1, 853.6, 1565.0, 143.0, 420.0, 100.0, 661.3},  // IRIS
    {73.8, 7921.5, 84880.0, 5754.3, 14995.0, 480.4, 669.7, 27.9, 24210.0, 18.9, 3790.0, 7981.7, 0.0, 622.7, 433.7, 11145.2, 12400.0, 945.1, 3291.3, 1358.4, 946.4, 411.7, 141.2, 1078.9, 1081.4, 610.0},  // DreamerV3
    {79.7, 8412.6, 66776.0, 8239.6, 17564.0, 509.0, 801.0, 15.9, 26182.0, 11.3, 4208.0, 7985.0, 0.0, 641.2, 164.6, 11044.3, 13540.0, 1316.0, 4522.5, 2673.5, 1028.0, 1888.0, 204.8, 983.6, 7781.0, 525.2},  // STORM
    {86.9, 8610.1, 99167.8, 5897.9, 20673.2, 427.4, 1526.4, 132.5, 18713.6, 20.4, 5382.2, 3856.3, 33.3, 19.7, 288.1, 5621.8, 4702.0, 274.1, 4499.3, 1958.2, 3698.5, 1369.8, 225.8, 744.1, 114.3, 551.2},  // DIAMOND
    {91.6, 8499.4, 64786.2, 4155.3, 14690.0, 460.5, 1394.5, 155.6, 12725.2, 18.2, 736.0, 4191.1, 6.3, 926.1, 2047.2, 7442.9, 16084.0, 263.3, 3606.1, 1075.9, 2331.0, 1392.4, 114.3, 1090.1, 95.2, 1103.7},  // JEDI
};

const char* const kSeedMethods[kNumSeedMethods] = {
    "TWM", "IRIS", "DreamerV3", "STORM", "DIAMOND", "JEDI"
};

// kSeedHns[method][game*5 + (seed-1)], human-normalized scores.
const double kSeedHns[kNumSeedMethods][kNumGames * kNumSeeds] = {
    {  // TWM
        7.118, 7.219, 6.281, 4.905, 6.732,  // Boxing
        5.27, 4.012, 3.463, 7.261, 2.248,  // Krull
        2.803, 3.213, 2.656, 1.139, 2.373,  // CrazyClimber
        0.53, 0.373, 1.137, 0.922, 0.326,  // Gopher
        0.822, 0.608, 1.994, 0.528, 1.855,  // RoadRunner
        1.258, 0.772, 1.382, 1.412, 1.264,  // Jamesbond
        1.008, 0.624, 1.002, 0.761, 1.033,  // Assault
        0.354, 0.752, 0.655, 0.58, 0.836,  // Breakout
        1.074, 0.526, 1.34, 1.132, 1.332,  // KungFuMaster
        1.146, 0.957, 1.128, 1.181, 1.181,  // Pong
        0.361, 0.514, 0.184, 0.267, 0.666,  // Kangaroo
        0.379, 0.568, 0.298, 4.852, 0.825,  // UpNDown
        0.986, 1.011, 1.051, 1.052, 0.0,  // Freeway
        0.175, 0.215, 1.158, 1.273, 0.242,  // BankHeist
        0.076, 0.134, 0.046, 0.123, 0.165,  // DemonAttack
        0.112, 0.217, 0.154, 0.36, 0.202,  // Hero
        0.001, 0.063, 0.009, 0.081, 0.235,  // BattleZone
        0.045, 0.048, 0.504, 0.33, 0.724,  // Frostbite
        0.25, 0.283, 0.035, 0.315, 0.308,  // Qbert
        0.195, 0.176, 0.231, 0.144, 0.218,  // MsPacman
        0.125, 0.092, 0.112, 0.116, 0.102,  // Asterix
        0.161, 0.147, 0.127, 0.196, 0.043,  // ChopperCommand
        0.038, 0.087, 0.068, 0.095, 0.05,  // Amidar
        0.089, 0.097, 0.044, 0.044, 0.051,  // Alien
        0.001, 0.001, 0.001, 0.001, 0.0,  // PrivateEye
        0.018, 0.016, 0.019, 0.014, 0.017,  // Seaquest
    },
    {  // IRIS
        7.175, 4.1, 4.642, 6.95, 6.283,  // Boxing
        4.168, 5.402, 3.169, 4.13, 6.637,  // Krull
        2.129, 2.21, 2.074, 2.646, 0.631,  // CrazyClimber
        1.267, 1.03, 1.324, 0.424, 0.546,  // Gopher
        1.448, 0.258, 2.182, 0.971, 1.271,  // RoadRunner
        1.675, 1.333, 1.669, 1.589, 1.654,  // Jamesbond
        2.423, 1.358, 1.731, 2.567, 4.45,  // Assault
        3.573, 2.913, 2.361, 2.382, 3.0,  // Breakout
        0.313, 0.698, 1.519, 0.628, 1.624,  // KungFuMaster
        1.133, 1.11, 1.057, 0.762, 0.938,  // Pong
        0.737, 0.228, 0.234, 0.013, 0.107,  // Kangaroo
        0.292, 0.433, 0.216, 0.278, 0.13,  // UpNDown
        1.044, 1.064, 1.03, 1.041, 1.068,  // Freeway
        0.038, 0.047, 0.073, 0.044, 0.061,  // BankHeist
        0.414, 1.022, 1.504, 1.353, 0.88,  // DemonAttack
        0.198, 0.198, 0.192, 0.23, 0.191,  // Hero
        0.42, 0.351, 0.257, 0.221, 0.289,  // BattleZone
        0.049, 0.043, 0.054, 0.043, 0.038,  // Frostbite
        0.052, 0.031, 0.047, 0.065, 0.024,  // Qbert
        0.142, 0.095, 0.043, 0.07, 0.171,  // MsPacman
        0.067, 0.109, 0.105, 0.061, 0.046,  // Asterix
        0.052, 0.071, 0.129, 0.205, 0.117,  // ChopperCommand
        0.111, 0.07, 0.093, 0.092, 0.035,  // Amidar
        0.02, 0.033, 0.03, 0.015, 0.041,  // Alien
        0.001, 0.001, 0.001, 0.001, 0.001,  // PrivateEye
        0.016, 0.019, 0.015, 0.008, 0.013,  // Seaquest
    },
    {  // DreamerV3
        6.95, 4.082, 7.138, 6.471, 6.075,  // Boxing
        4.222, 5.674, 4.402, 7.838, 7.482,  // Krull
        2.602, 4.424, 1.079, 3.304, 3.382,  // CrazyClimber
        8.141, 0.744, 1.456, 0.677, 1.737,  // Gopher
        3.186, 1.036, 1.39, 3.03, 0.922,  // RoadRunner
        2.085, 1.02, 1.264, 1.104, 2.77,  // Jamesbond
        0.865, 1.02, 0.355, 0.532, 1.533,  // Assault
        1.098, 0.67, 1.618, 0.514, 0.648,  // Breakout
        1.014, 1.034, 1.17, 1.001, 1.11,  // KungFuMaster
        1.153, 1.153, 1.068, 1.118, 1.11,  // Pong
        3.905, 1.022, 0.544, 0.55, 0.245,  // Kangaroo
        0.506, 0.933, 0.491, 0.35, 1.058,  // UpNDown
        0.0, 0.0, 0.0, 0.0, 0.0,  // Freeway
        0.381, 0.473, 0.451, 1.307, 1.507,  // BankHeist
        0.1, 0.036, 0.402, 0.147, 0.09,  // DemonAttack
        0.222, 0.412, 0.418, 0.244, 0.403,  // Hero
        0.191, 0.27, 0.32, 0.435, 0.227,  // BattleZone
        0.046, 0.048, 0.092, 0.784, 0.06,  // Frostbite
        0.314, 0.07, 0.227, 0.245, 0.32,  // Qbert
        0.134, 0.161, 0.111, 0.141, 0.243,  // MsPacman
        0.102, 0.124, 0.098, 0.058, 0.063,  // Asterix
        -0.05, -0.078, -0.055, -0.04, -0.081,  // ChopperCommand
        0.072, 0.082, 0.071, 0.076, 0.094,  // Amidar
        0.082, 0.118, 0.143, 0.203, 0.071,  // Alien
        0.071, 0.002, 0.001, 0.001, 0.001,  // PrivateEye
        0.01, 0.016, 0.01, 0.011, 0.017,  // Seaquest
    },
    {  // STORM
        5.95, 7.533, 7.533, 5.975, 6.167,  // Boxing
        7.128, 6.875, 5.79, 7.352, 4.774,  // Krull
        1.666, 2.725, 1.915, 1.983, 2.889,  // CrazyClimber
        6.484, 4.423, 0.848, 4.665, 2.101,  // Gopher
        2.715, 2.324, 1.548, 2.216, 2.4,  // RoadRunner
        2.743, 1.538, 1.245, 1.629, 1.611,  // Jamesbond
        1.154, 1.501, 1.012, 0.903, 0.998,  // Assault
        0.583, 0.497, 0.392, 0.219, 0.774,  // Breakout
        1.143, 1.312, 0.949, 0.905, 1.458,  // KungFuMaster
        1.176, 1.167, 0.377, 1.164, 0.646,  // Pong
        0.325, 1.096, 2.343, 2.463, 0.74,  // Kangaroo
        0.394, 0.786, 0.598, 1.005, 0.555,  // UpNDown
        0.0, 0.0, 0.0, 0.0, 0.0,  // Freeway
        0.831, 0.3, 0.797, 1.068, 1.248,  // BankHeist
        -0.004, 0.005, 0.003, 0.012, 0.019,  // DemonAttack
        0.225, 0.203, 0.419, 0.417, 0.417,  // Hero
        0.349, 0.435, 0.148, 0.248, 0.426,  // BattleZone
        0.371, 0.079, 0.047, 0.46, 0.507,  // Frostbite
        0.288, 0.365, 0.33, 0.315, 0.342,  // Qbert
        0.281, 0.286, 0.287, 0.463, 0.463,  // MsPacman
        0.096, 0.074, 0.087, 0.134, 0.101,  // Asterix
        0.216, 0.163, 0.199, 0.09, 0.152,  // ChopperCommand
        0.105, 0.131, 0.112, 0.145, 0.087,  // Amidar
        0.058, 0.072, 0.07, 0.199, 0.148,  // Alien
        0.208, 0.076, 0.215, 0.001, 0.058,  // PrivateEye
        0.008, 0.009, 0.016, 0.011, 0.011,  // Seaquest
    },
    {  // DIAMOND
        8.275, 6.992, 8.117, 5.942, 6.842,  // Boxing
        7.063, 5.292, 6.127, 7.253, 7.109,  // Krull
        2.812, 3.532, 3.423, 4.209, 3.666,  // CrazyClimber
        0.336, 1.893, 1.049, 6.306, 3.503,  // Gopher
        1.56, 3.218, 3.771, 2.58, 2.059,  // RoadRunner
        1.443, 1.296, 1.751, 1.311, 1.474,  // Jamesbond
        2.595, 2.116, 2.725, 3.02, 2.092,  // Assault
        4.247, 5.108, 2.753, 3.691, 6.906,  // Breakout
        0.626, 1.18, 1.143, 0.636, 0.52,  // KungFuMaster
        1.133, 1.178, 1.178, 1.173, 1.153,  // Pong
        3.292, 1.946, 1.897, 1.075, 0.724,  // Kangaroo
        0.287, 0.238, 0.445, 0.076, 0.444,  // UpNDown
        1.142, 1.139, 1.095, 1.115, 1.139,  // Freeway
        0.007, 0.003, 0.007, -0.001, 0.021,  // BankHeist
        0.051, -0.025, 0.079, 0.098, 0.171,  // DemonAttack
        0.071, 0.216, 0.073, 0.221, 0.189,  // Hero
        0.114, 0.234, -0.004, 0.001, -0.009,  // BattleZone
        0.044, 0.054, 0.05, 0.047, 0.048,  // Frostbite
        0.327, 0.28, 0.342, 0.367, 0.315,  // Qbert
        0.221, 0.239, 0.201, 0.318, 0.263,  // MsPacman
        0.34, 0.27, 0.859, 0.316, 0.319,  // Asterix
        0.086, 0.046, 0.149, 0.138, 0.006,  // ChopperCommand
        0.122, 0.133, 0.103, 0.157, 0.126,  // Amidar
        0.069, 0.066, 0.099, 0.087, 0.054,  // Alien
        0.001, 0.001, 0.003, 0.001, 0.001,  // PrivateEye
        0.006, 0.017, 0.017, 0.005, 0.013,  // Seaquest
    },
    {  // JEDI
        8.239, 7.233, 7.944, 6.466, 8.232,  // Boxing
        6.408, 7.461, 6.495, 6.901, 5.06,  // Krull
        2.802, 0.187, 2.5, 2.317, 2.973,  // CrazyClimber
        1.942, 1.81, 1.495, 1.905, 1.891,  // Gopher
        1.03, 2.478, 2.048, 2.478, 1.334,  // RoadRunner
        1.539, 1.6, 1.538, 1.518, 1.686,  // Jamesbond
        2.428, 3.233, 2.241, 1.37, 2.006,  // Assault
        4.251, 5.07, 7.094, 4.96, 5.351,  // Breakout
        0.498, 0.417, 0.603, 0.949, 0.306,  // KungFuMaster
        1.135, 1.012, 1.105, 1.15, 1.104,  // Pong
        0.097, 0.304, 0.532, 0.03, 0.184,  // Kangaroo
        0.205, 0.364, 0.333, 0.205, 0.532,  // UpNDown
        1.057, 0.0, 0.0, 0.0, 0.0,  // Freeway
        1.595, 1.575, 0.921, 0.418, 1.662,  // BankHeist
        0.722, 0.992, 0.879, 1.375, 1.24,  // DemonAttack
        0.071, 0.214, 0.207, 0.223, 0.362,  // Hero
        0.611, 0.489, 0.313, 0.249, 0.309,  // BattleZone
        0.043, 0.043, 0.048, 0.049, 0.049,  // Frostbite
        0.195, 0.288, 0.284, 0.261, 0.267,  // Qbert
        0.098, 0.115, 0.102, 0.169, 0.095,  // MsPacman
        0.295, 0.25, 0.142, 0.345, 0.246,  // Asterix
        0.092, 0.066, 0.079, 0.132, 0.073,  // ChopperCommand
        0.074, 0.038, 0.093, 0.043, 0.07,  // Amidar
        0.134, 0.269, 0.097, 0.033, 0.092,  // Alien
        0.001, 0.001, 0.001, 0.001, 0.001,  // PrivateEye
        0.028, 0.015, 0.03, 0.037, 0.014,  // Seaquest
    },
};

// Mean raw scores of the four-baseline averaged agent, same game order.
const double kAveragedRaw[kNumGames] = {
    76.325, 7290.05, 73777.65, 3970.125, 12963.15, 444.775, 928.5, 37.65, 23479.1, 15.675, 2596.05, 9186.725, 22.225, 452.5, 713.05, 9124.175, 10983.0, 989.925, 3001.0, 1647.0, 982.55, 1392.6, 152.15, 759.3, 2212.4, 644.725
};

// Published per-game HNS of the averaged agent (rounded as printed).
const double kPartitionRefHns[kNumGames] = {
    6.35, 5.33, 2.52, 1.72, 1.65, 1.52, 1.36, 1.25, 1.03, 1.03, 0.85, 0.78, 0.75, 0.59, 0.31, 0.27, 0.25, 0.22, 0.21, 0.2, 0.093, 0.088, 0.085, 0.077, 0.032, 0.014
};

const char* const kBottleneckGames[kNumBottleneckGames] = {"Breakout", "Assault"};
const char* const kBottleneckMethods[kNumBottleneckMethods] = {
    "TWM", "DreamerV3", "STORM", "IRIS", "DIAMOND", "JEDI"
};
// Published HNS on the visually bottlenecked tasks, [game][method].
const double kBottleneckHns[kNumBottleneckGames][kNumBottleneckMethods] = {
    {0.635, 1.02, 0.493, 2.85, 4.54, 5.35},  // Breakout
    {0.886, 0.931, 1.11, 2.51, 2.51, 2.26},  // Assault
};

}  // namespace asymbench::embedded::detail
