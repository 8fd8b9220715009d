#pragma once
// Stable isotope masses (Da) and natural abundances, NIST isotopic compositions.
// One isotope per line in the isotope-table text format.

namespace topiso::detail {

inline constexpr const char* kNistIsotopeTable = R"(# symbol  mass  abundance
H 1.00782503207 0.999885
H 2.0141017778 0.000115
He 3.0160293191 1.34e-06
He 4.00260325415 0.99999866
Li 6.015122795 0.0759
Li 7.01600455 0.9241
Be 9.0121822 1.0
B 10.012937 0.199
B 11.0093054 0.801
C 12.0 0.9893
C 13.0033548378 0.0107
N 14.0030740048 0.99636
N 15.0001088982 0.00364
O 15.99491461956 0.99757
O 16.9991317 0.00038
O 17.999161 0.00205
F 18.99840322 1.0
Ne 19.9924401754 0.9048
Ne 20.99384668 0.0027
Ne 21.991385114 0.0925
Na 22.9897692809 1.0
Mg 23.9850417 0.7899
Mg 24.98583692 0.1
Mg 25.982592929 0.1101
Al 26.98153863 1.0
Si 27.9769265325 0.92223
Si 28.9764947 0.04685
Si 29.97377017 0.03092
P 30.97376163 1.0
S 31.972071 0.9499
S 32.97145876 0.0075
S 33.9678669 0.0425
S 35.96708076 0.0001
Cl 34.96885268 0.7576
Cl 36.96590259 0.2424
Ar 35.967545106 0.003365
Ar 37.9627324 0.000632
Ar 39.9623831225 0.996003
K 38.96370668 0.932581
K 39.96399848 0.000117
K 40.96182576 0.067302
Ca 39.96259098 0.96941
Ca 41.95861801 0.00647
Ca 42.9587666 0.00135
Ca 43.9554818 0.02086
Ca 45.9536926 4e-05
Ca 47.952534 0.00187
Sc 44.9559119 1.0
Ti 45.9526316 0.0825
Ti 46.9517631 0.0744
Ti 47.9479463 0.7372
Ti 48.94787 0.0541
Ti 49.9447912 0.0518
Cr 49.9460442 0.04345
Cr 51.9405075 0.83789
Cr 52.9406494 0.09501
Cr 53.9388804 0.02365
V 49.9471585 0.0025
V 50.9439595 0.9975
Fe 53.9396105 0.05845
Fe 55.9349375 0.91754
Fe 56.935394 0.02119
Fe 57.9332756 0.00282
Mn 54.9380451 1.0
Ni 57.9353429 0.680769
Ni 59.9307864 0.262231
Ni 60.931056 0.011399
Ni 61.9283451 0.036345
Ni 63.927966 0.009256
Co 58.933195 1.0
Cu 62.9295975 0.6915
Cu 64.9277895 0.3085
Zn 63.9291422 0.48268
Zn 65.9260334 0.27975
Zn 66.9271273 0.04102
Zn 67.9248442 0.19024
Zn 69.9253193 0.00631
Ga 68.9255736 0.60108
Ga 70.9247013 0.39892
Ge 69.9242474 0.2038
Ge 71.9220758 0.2731
Ge 72.9234589 0.0776
Ge 73.9211778 0.3672
Ge 75.9214026 0.0783
Se 73.9224764 0.0089
Se 75.9192136 0.0937
Se 76.919914 0.0763
Se 77.9173091 0.2377
Se 79.9165213 0.4961
Se 81.9166994 0.0873
As 74.9215965 1.0
Kr 77.9203648 0.00355
Kr 79.916379 0.02286
Kr 81.9134836 0.11593
Kr 82.914136 0.115
Kr 83.911507 0.56987
Kr 85.91061073 0.17279
Br 78.9183371 0.5069
Br 80.9162906 0.4931
Sr 83.913425 0.0056
Sr 85.9092602 0.0986
Sr 86.9088771 0.07
Sr 87.9056121 0.8258
Rb 84.911789738 0.7217
Rb 86.909180527 0.2783
Y 88.9058483 1.0
Zr 89.9047044 0.5145
Zr 90.9056458 0.1122
Zr 91.9050408 0.1715
Zr 93.9063152 0.1738
Zr 95.9082734 0.028
Mo 91.906811 0.1477
Mo 93.9050883 0.0923
Mo 94.9058421 0.159
Mo 95.9046795 0.1668
Mo 96.9060215 0.0956
Mo 97.9054082 0.2419
Mo 99.907477 0.0967
Nb 92.9063781 1.0
Ru 95.907598 0.0554
Ru 97.905287 0.0187
Ru 98.9059393 0.1276
Ru 99.9042195 0.126
Ru 100.9055821 0.1706
Ru 101.9043493 0.3155
Ru 103.905433 0.1862
Pd 101.905609 0.0102
Pd 103.904036 0.1114
Pd 104.905085 0.2233
Pd 105.903486 0.2733
Pd 107.903892 0.2646
Pd 109.905153 0.1172
Rh 102.905504 1.0
Cd 105.906459 0.0125
Cd 107.904184 0.0089
Cd 109.9030021 0.1249
Cd 110.9041781 0.128
Cd 111.9027578 0.2413
Cd 112.9044017 0.1222
Cd 113.9033585 0.2873
Cd 115.904756 0.0749
Ag 106.905097 0.51839
Ag 108.904752 0.48161
Sn 111.904818 0.0097
Sn 113.902779 0.0066
Sn 114.903342 0.0034
Sn 115.901741 0.1454
Sn 116.902952 0.0768
Sn 117.901603 0.2422
Sn 118.903308 0.0859
Sn 119.9021947 0.3258
Sn 121.903439 0.0463
Sn 123.9052739 0.0579
In 112.904058 0.0429
In 114.903878 0.9571
Te 119.90402 0.0009
Te 121.9030439 0.0255
Te 122.90427 0.0089
Te 123.9028179 0.0474
Te 124.9044307 0.0707
Te 125.9033117 0.1884
Te 127.9044631 0.3174
Te 129.9062244 0.3408
Sb 120.9038157 0.5721
Sb 122.904214 0.4279
Xe 123.905893 0.000952
Xe 125.904274 0.00089
Xe 127.9035313 0.019102
Xe 128.9047794 0.264006
Xe 129.903508 0.04071
Xe 130.9050824 0.212324
Xe 131.9041535 0.269086
Xe 133.9053945 0.104357
Xe 135.907219 0.088573
I 126.904473 1.0
Ba 129.9063208 0.00106
Ba 131.9050613 0.00101
Ba 133.9045084 0.02417
Ba 134.9056886 0.06592
Ba 135.9045759 0.07854
Ba 136.9058274 0.11232
Ba 137.9052472 0.71698
Cs 132.905451933 1.0
Ce 135.907172 0.00185
Ce 137.905991 0.00251
Ce 139.9054387 0.8845
Ce 141.909244 0.11114
La 137.907112 0.0009
La 138.9063533 0.9991
Pr 140.9076528 1.0
Nd 141.9077233 0.272
Nd 142.9098143 0.122
Nd 143.9100873 0.238
Nd 144.9125736 0.083
Nd 145.9131169 0.172
Nd 147.916893 0.057
Nd 149.920891 0.056
Sm 143.911999 0.0307
Sm 146.9148979 0.1499
Sm 147.9148227 0.1124
Sm 148.9171847 0.1382
Sm 149.9172755 0.0738
Sm 151.9197324 0.2675
Sm 153.9222093 0.2275
Eu 150.9198502 0.4781
Eu 152.9212303 0.5219
Gd 151.919791 0.002
Gd 153.9208656 0.0218
Gd 154.922622 0.148
Gd 155.9221227 0.2047
Gd 156.9239601 0.1565
Gd 157.9241039 0.2484
Gd 159.9270541 0.2186
Dy 155.924283 0.00056
Dy 157.924409 0.00095
Dy 159.9251975 0.02329
Dy 160.9269334 0.18889
Dy 161.9267984 0.25475
Dy 162.9287312 0.24896
Dy 163.9291748 0.2826
Tb 158.9253468 1.0
Er 161.928778 0.00139
Er 163.9292 0.01601
Er 165.9302931 0.33503
Er 166.9320482 0.22869
Er 167.9323702 0.26978
Er 169.9354643 0.1491
Ho 164.9303221 1.0
Yb 167.933897 0.0013
Yb 169.9347618 0.0304
Yb 170.9363258 0.1428
Yb 171.9363815 0.2183
Yb 172.9382108 0.1613
Yb 173.9388621 0.3183
Yb 175.9425717 0.1276
Tm 168.9342133 1.0
Hf 173.940046 0.0016
Hf 175.9414086 0.0526
Hf 176.9432207 0.186
Hf 177.9436988 0.2728
Hf 178.9458161 0.1362
Hf 179.94655 0.3508
Lu 174.9407718 0.9741
Lu 175.9426863 0.0259
W 179.946704 0.0012
W 181.9482042 0.265
W 182.950223 0.1431
W 183.9509312 0.3064
W 185.9543641 0.2843
Ta 179.9474648 0.00012
Ta 180.9479958 0.99988
Os 183.9524891 0.0002
Os 185.9538382 0.0159
Os 186.9557505 0.0196
Os 187.9558382 0.1324
Os 188.9581475 0.1615
Os 189.958447 0.2626
Os 191.9614807 0.4078
Re 184.952955 0.374
Re 186.9557531 0.626
Pt 189.959932 0.00014
Pt 191.961038 0.00782
Pt 193.9626803 0.32967
Pt 194.9647911 0.33832
Pt 195.9649515 0.25242
Pt 197.967893 0.07163
Ir 190.960594 0.373
Ir 192.9629264 0.627
Hg 195.965833 0.0015
Hg 197.966769 0.0997
Hg 198.9682799 0.1687
Hg 199.968326 0.231
Hg 200.9703023 0.1318
Hg 201.970643 0.2986
Hg 203.9734939 0.0687
Au 196.9665687 1.0
Tl 202.9723442 0.2952
Tl 204.9744275 0.7048
Pb 203.9730436 0.014
Pb 205.9744653 0.241
Pb 206.9758969 0.221
Pb 207.9766521 0.524
Bi 208.9803987 1.0
Pa 231.035884 1.0
Th 232.0380553 1.0
U 234.0409521 5.4e-05
U 235.0439299 0.007204
U 238.0507882 0.992742
)";

}  // namespace topiso::detail
