#pragma once

// Embedded copy of data/catalog.txt; a unit test keeps the two identical.
// Record format: id | offset | property | operator | terms

#include <string_view>

namespace eigenseq {

inline constexpr std::string_view kCatalogText = R"(
S1 | 0 | alpha | R∘BINOMIAL | 1,1,2,5,15,52,203,877,4140
S2 | 0 | alpha | R∘BINOMIAL^2 | 1,1,3,11,49,257,1539,10299
S3 | 0 | alpha | R∘BINOMIAL^3 | 1,1,4,19,109,742,5815,51193
S4 | 0 | alpha | R∘BINOMIAL^4 | 1,1,5,29,201,1657,15821
S5 | 0 | alpha | R^2∘BINOMIAL | 1,1,1,2,4,9,23,65,199,654
S6 | 0 | beta | M^-1∘BINOMIAL | 1,1,3,13,75,541,4683,47293
S7 | 1 | alpha | R∘STIRLING | 1,1,2,6,26,152,1144,10742
S8 | 1 | alpha | R∘STIRLING^2 | 1,1,3,14,97,934,11814,188650
S9 | 1 | alpha | R^2∘STIRLING | 1,1,1,2,5,16,66,343,2167
S10 | 1 | beta | M^-1∘STIRLING | 1,1,4,32,436,9012,262760
S11 | 0 | alpha | R∘CONV | 1,1,2,5,14,42,132,429,1430
S12 | 0 | alpha | R∘CONV^2 | 1,1,4,22,140,969,7084,53820
S13 | 0 | alpha | R∘CONV^3 | 1,1,8,92,1240,18278,285384
S14 | 0 | alpha | R^2∘CONV | 1,1,1,2,3,6,11,22,44,90,187
S15 | 0 | alpha | R∘EXP-CONV | 1,1,2,6,24,120,720,5040
S16 | 0 | alpha | R∘EXP-CONV^2 | 1,1,4,28,280,3640,58240
S17 | 0 | alpha | R^2∘EXP-CONV | 1,1,1,2,4,10,30,100,380,1600
S18 | 0 | alpha | R∘LCM-CONV | 1,1,2,5,14,40,128,369,1214
S19 | 0 | alpha | R∘GCD-CONV | 1,1,2,3,4,6,6,11,10,18,16
S20 | 0 | alpha | R∘AND-CONV | 1,1,2,1,2,4,0,5,2,4,0,10,0
S21 | 0 | alpha | R∘OR-CONV | 1,1,2,7,20,58,174,519,1550
S22 | 0 | gamma | R∘XOR-CONV | 0,1,2,4,14,38,118,338,1006
S23 | 1 | alpha | R∘MOBIUS^-1 | 1,1,2,3,5,6,10,11,16,19,26
S24 | 1 | alpha | R∘MOBIUS^-2 | 1,1,3,5,10,12,24,26,43,52,78
S25 | 1 | alpha | R^2∘MOBIUS^-1 | 1,1,1,2,2,4,3,7,4,11,6,15,7
S26 | 1 | beta | M^-1∘MOBIUS^-1 | 1,1,1,2,1,3,1,4,2,3,1,8,1,3,3
S27 | 1 | alpha | R∘WEIGH | 1,1,1,2,3,6,12,25,52,113,247
S28 | 1 | alpha | R∘WEIGH^2 | 1,1,1,3,6,16,43,120,339,985
S29 | 1 | alpha | R^2∘WEIGH | 1,1,1,1,2,2,4,6,10,17,29,51
S30 | 1 | alpha | R∘EULER | 1,1,2,4,9,20,48,115,286,719
S31 | 1 | alpha | R∘EULER^2 | 1,1,3,8,25,77,258,871,3049
S32 | 1 | alpha | R^2∘EULER | 1,1,1,2,3,6,10,20,36,72,137
S33 | 1 | beta | M^-1∘EULER | 1,1,2,5,12,33,90,261,766,2312
S34 | 1 | delta | PARTITION | 1,2,2,4,5,7,9,12,16,20,25,32
S35 | 1 | delta | PARTITION^2 | 1,2,2,4,4,6,7,11,12,16,18,25
S36 | 1 | delta | PARTITION^2 | 1,2,2,4,4,7,8,12,13,18,21,29
S37 | 1 | delta | PARTITION^2 | 1,2,3,4,6,9,11,15,19,25,31,41
S38 | 1 | delta | PARTITION^2 | 1,2,3,5,6,10,12,17,22,29,36,48
S11 | 1 | alpha | R∘INVERT | 1,1,2,5,14,42,132,429,1430
S39 | 1 | alpha | R∘INVERT^2 | 1,1,3,11,45,197,903,4279,20793
S40 | 1 | alpha | R∘INVERT^3 | 1,1,4,19,100,562,3304,20071
S41 | 1 | alpha | R^2∘INVERT | 1,1,1,2,4,9,21,51,127,323,835
S42 | 1 | alpha | R^3∘INVERT | 1,1,1,1,2,4,8,17,37,82,185,423
S43 | 1 | alpha | R^4∘INVERT | 1,1,1,1,1,2,4,8,16,33,69,146
S39 | 1 | beta | M^-1∘INVERT | 1,1,3,11,45,197,903,4279,20793
S44 | 1 | epsilon | REVERT | 1,2,4,7,10,12,18,40,44,45
S15 | 1 | alpha | R∘EXP | 1,1,2,6,24,120,720,5040
S45 | 1 | alpha | R^2∘EXP | 1,1,1,2,5,16,61,272,1385
S46 | 1 | alpha | R^3∘EXP | 1,1,1,1,2,5,15,53,213,961
S47 | 1 | alpha | R∘EXP^2 | 1,1,3,14,89,716,6967,79524
S48 | 1 | beta | M^-1∘EXP | 1,1,4,26,236,2752,39208
S49 | 0 | beta | N^-1∘BINOMIAL | 1,-1/2,0,1/4,0,-1/2,0,17/8,0,-31/2,0,691/4
S50 | 1 | beta | N^-1∘STIRLING | 1,-1/2,1/4,1/2,-19/8,-39/16,2623/32,-365/4
S51 | 1 | beta | N^-1∘MOBIUS | 1,1/2,1/2,1/4,1/2,0,1/2,1/8,1/4,0,1/2,-1/8,1/2,0
S52 | 1 | beta | N^-1∘EXP | 1,-1/2,1/4,1/8,-13/16,47/32,73/64,-2447/128,16811/256
)";

}  // namespace eigenseq
