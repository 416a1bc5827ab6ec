"""Reference per-trial final energies for the built-in benchmark graphs.

Each list holds the depth-``pmax`` energy of every independent trial,
stored as integer numerators over 1024 (the shot count), keyed by
``(graph, mixer)``. Edge-coloring graphs ran to depth 9; the partition
graph ``frakG`` ran to depth 7.
"""

SHOT_DENOMINATOR = 1024

_NUMERATORS = {
    ('gamma1', 'b'): [
        737, 484, 723, 974, 780, 710, 367, 1138, 1190, 445, 1130, 872, 731, 1094, 689,
        690, 1133, 944, 845, 575, 620, 762, 410, 469, 867, 481, 822, 557, 462, 519,
        1025, 687, 486, 752, 596, 1129, 996, 455, 994, 472, 943, 499, 1039, 875, 722,
        533, 680, 1059, 534, 474
    ],
    ('gamma1', 'hm'): [
        440, 346, 464, 439, 602, 763, 1076, 439, 223, 197, 972, 525, 434, 317, 653, 484,
        352, 884, 609, 585, 470, 595, 671, 508, 669, 671, 441, 450, 2755, 314, 473, 329,
        732, 348, 578, 547, 1302, 912, 440, 432, 369, 447, 602, 544, 565, 333, 553, 465,
        467, 356
    ],
    ('gamma2', 'b'): [
        915, 755, 1056, 1009, 608, 863, 1400, 1053, 775, 1305, 885, 1083, 1355, 952,
        1137, 1378, 1004, 953, 733, 1363, 1258, 1126, 693, 888, 1400, 791, 547, 749,
        954, 1389, 1229, 1232, 1151, 1025, 1287, 1328, 932, 818, 1317, 929, 756, 761,
        966, 976, 712, 954, 757, 493, 659, 831, 886, 807, 1211, 541, 1284, 1382
    ],
    ('gamma2', 'hm'): [
        1082, 970, 742, 708, 817, 863, 746, 1130, 905, 580, 780, 901, 789, 876, 1073,
        679, 430, 515, 988, 715, 682, 935, 501, 445, 650, 605, 664, 562, 876, 866, 832,
        918, 1047, 873, 535, 830, 712, 949, 516, 454, 894, 788, 662, 675, 429, 746, 972,
        692, 1168, 764, 910, 378, 887, 549, 640, 749
    ],
    ('gamma3', 'b'): [
        777, 1588, 1181, 1410, 1421, 669, 1125, 856, 1334, 2013, 1267, 1329, 1640, 1276,
        1203, 1904, 1318, 1245, 1443, 1622, 1287, 1088, 1181, 1247, 1255, 872, 967, 920,
        2081, 1134, 1303, 1077, 1265, 1355, 792, 2092, 727, 1467, 1303, 1171, 1250, 690,
        1091, 923, 1554, 1028, 796, 1627, 1410, 1111, 1441, 1475, 1524, 1628, 1392, 1505
    ],
    ('gamma3', 'hm'): [
        1020, 1849, 1877, 1884, 659, 1446, 930, 1046, 1902, 1033, 1024, 756, 433, 508,
        781, 1305, 642, 1063, 750, 711, 909, 1029, 913, 864, 1106, 1144, 802, 768, 1146,
        1008, 1123, 1083, 988, 1538, 486, 852, 971, 862, 1207, 1107, 867, 685, 1148,
        786, 640, 902, 905, 568, 1036, 814, 583, 827, 378, 763, 565, 590
    ],
    ('gamma4', 'b'): [
        2027, 1804, 1948, 2077, 1931, 1652, 1527, 1883, 1716, 1739, 1281, 1114, 1572,
        985, 1675, 1017, 1245, 1350, 1529, 1036, 1473, 1640, 1217, 756, 1997, 1373, 991,
        1908, 1980, 1564, 2328, 1464, 1078, 1868, 1625, 1614, 1633, 981, 2192, 1444,
        999, 1458, 1572, 1462, 1705, 1143, 1332, 1741, 1076, 1240, 1100, 1630, 1024,
        2138, 1699, 1644
    ],
    ('gamma4', 'hm'): [
        1370, 4117, 1178, 1130, 1165, 1425, 800, 1138, 1178, 1141, 1176, 839, 1303, 738,
        1279, 1331, 740, 913, 1409, 1806, 789, 1546, 714, 790, 1662, 1075, 789, 1060,
        1608, 841, 785, 1544, 1555, 781, 1179, 1125, 1092, 569, 957, 1362, 1355, 4134,
        1439, 1117, 1333, 1544, 1118, 1579, 863, 524, 819, 1468, 794, 774, 756, 962
    ],
    ('gamma5', 'b'): [
        909, 1307, 1349, 907, 692, 1303, 1384, 1068, 1907, 2070, 1786, 2117, 1605, 1432,
        1246, 1790, 928, 1394, 1206, 1773, 1174, 993, 1512, 896, 1458, 1282, 631, 3889,
        924, 1202, 783, 806, 2172, 1621, 1352, 875, 920, 1585, 790, 1233, 1757, 1490,
        1627, 1128, 1735, 1476, 1327, 985, 1397, 1768
    ],
    ('gamma5', 'hm'): [
        569, 1097, 834, 961, 559, 1228, 714, 1067, 1207, 1102, 757, 988, 845, 931, 360,
        1208, 1277, 1197, 1047, 605, 986, 1012, 583, 908, 1113, 561, 1297, 774, 777,
        892, 1030, 773, 787, 1035, 1079, 1952, 793, 1077, 756, 871, 1009, 673, 737,
        1112, 1219, 462, 1036, 1262, 1007, 715
    ],
    ('gamma6', 'b'): [
        1304, 904, 957, 779, 825, 888, 1054, 989, 941, 694, 946, 1505, 966, 516, 759,
        820, 1269, 634, 869, 886, 591, 930, 741, 838, 1279, 827, 795, 514
    ],
    ('gamma6', 'hm'): [
        758, 587, 439, 891, 496, 825, 489, 561, 562, 442, 636, 549, 368, 351, 650, 370,
        579, 467, 522, 790, 732, 451, 433, 517, 570, 339, 174, 439
    ],
    ('frakG', 'b'): [
        6394, 11757, 7200, 14082, 10584, 11614, 8482, 10822, 8193, 8749, 9445, 12010,
        9985, 9065, 6917, 11969, 10612, 8246, 7923, 9533, 11901, 11406, 9524, 9299,
        8576, 10054, 11106, 10297, 11642, 12456, 12271, 11635, 10920, 10597, 9967, 9316,
        9864, 11964, 10801, 8981, 11099, 8759, 11200, 11121, 9517, 13963, 10761, 12205,
        10363, 11018
    ],
    ('frakG', 'hm'): [
        11467, 10630, 10384, 8312, 6462, 9507, 11405, 5686, 8298, 10462, 6899, 6013,
        8037, 7360, 10108, 4584, 9940, 5514, 4649, 6190, 9320, 6826, 10130, 10752, 7693,
        5551, 9563, 5378, 5112, 5047, 5925, 5769, 9894, 7620, 8132, 5180, 10204, 9029,
        9811, 9303, 12194, 13052, 9077, 9894, 6598, 11024, 6038, 6164, 10745, 9349
    ],
    ('gamma1', 'hchi'): [
        769, 478, 631, 453, 1007, 676, 468, 2284, 511, 166, 711, 460, 392, 561, 522,
        586, 1161, 637, 582, 347, 463, 586, 494, 739, 472, 971, 544, 660, 430, 531, 325,
        553, 568, 618, 566, 424, 406, 342, 580, 462, 679, 365, 266, 1332, 326, 265, 438,
        366, 493, 650
    ],
    ('gamma2', 'hchi'): [
        588, 1392, 949, 529, 2698, 1244, 529, 722, 769, 851, 520, 406, 738, 698, 828,
        970, 554, 646, 3409, 1022, 693, 962, 726, 510, 829, 676, 696, 560, 1343, 738,
        573, 811, 884, 3438, 722, 803, 708, 1106, 787, 930, 424, 814, 632, 756, 611,
        937, 539, 618, 627, 565, 594, 1095, 772, 433, 1215, 632
    ],
    ('gamma3', 'hchi'): [
        1598, 1021, 857, 665, 792, 1152, 559, 559, 693, 372, 627, 642, 871, 975, 829,
        563, 718, 636, 327, 648, 890, 687, 492, 825, 877, 1009, 540, 593, 1582, 605,
        702, 589, 525, 1083, 1578, 923, 756, 772, 919, 982, 526, 511, 531, 876, 566,
        517, 954, 455, 266, 512, 1067, 520, 469, 757, 692, 802
    ],
    ('gamma4', 'hchi'): [
        595, 1671, 1155, 1433, 1180, 1008, 1626, 584, 1240, 1653, 1686, 751, 849, 897,
        1938, 1491, 980, 1131, 1346, 1476, 891, 941, 2082, 773, 756, 843, 769, 1154,
        1068, 1196, 490, 1565, 1415, 1484, 685, 470, 1173, 4164, 1394, 863, 1234, 573,
        1372, 1148, 1503, 4191, 1152, 1272, 1145, 450, 1297, 1557, 1515, 1695, 1300, 925
    ],
    ('gamma5', 'hchi'): [
        789, 1040, 651, 1149, 1203, 1046, 781, 864, 1073, 763, 301, 737, 3650, 695, 966,
        1056, 1077, 1331, 595, 430, 1098, 1012, 1078, 1191, 794, 1186, 1115, 948, 1028,
        737, 1315, 1142, 1027, 440, 949, 1161, 1123, 1294, 781, 1027, 691, 835, 1087,
        723, 475, 878, 476, 648, 954, 781
    ],
    ('frakG', 'hchi'): [
        9966, 7246, 6555, 5468, 10993, 8911, 9177, 13975, 6268, 8743, 8168, 8064, 13441,
        5772, 11636, 7717, 8397, 9563, 9631, 7150, 11015, 9034, 5766, 7729, 8253, 6586,
        10953, 9927, 9169, 10292, 8781, 12955, 13983, 9451, 9450, 5063, 7900, 7456,
        5473, 5788, 13848, 13975, 12333, 7837, 10852, 9861, 9325, 12957, 13258, 6701
    ],
}

