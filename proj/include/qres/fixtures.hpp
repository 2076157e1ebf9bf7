// Copyright 2026 The qres authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include "qres/hamio.hpp"
#include "qres/pauli.hpp"

namespace qres {

// Tabulated reference Hamiltonians shipped with the library. The digests pin
// the tables byte-for-byte; transcription is additionally guarded by the
// number-conservation and spectrum tests.

inline constexpr std::string_view kModelN5Text = R"fix(# model system complex-rotated Hamiltonian
# n_basis 5
# theta 0.16
# alpha 0.65
# lambda 0.1
# plateau 0.8
# ratio 0.45
YYIII -0.091665 0.096819
XXIII -0.091665 0.096819
IIIII 4.599205 -0.533073
ZIIII -0.251131 0.022353
YZYII 0.017916 -0.030997
XZXII 0.017916 -0.030997
YZZYI -0.007005 0.015446
XZZXI -0.007005 0.015446
YZZZY 0.003680 -0.009152
XZZZX 0.003680 -0.009152
IZIII -1.063280 0.032614
IYYII -0.089297 0.108259
IXXII -0.089297 0.108259
IYZYI 0.014213 -0.055870
IXZXI 0.014213 -0.055870
IYZZY -0.003869 0.033693
IXZZX -0.003869 0.033693
IIZII -1.445349 0.113618
IIYYI -0.209952 0.010748
IIXXI -0.209952 0.010748
IIYZY 0.060302 -0.008776
IIXZX 0.060302 -0.008776
IIIZI -1.127058 0.243702
IIIYY -0.336956 0.051691
IIIXX -0.336956 0.051691
IIIIZ -0.712385 0.120784
)fix";

inline constexpr std::string_view kH2MinusText = R"fix(# H2- complex-rotated Hamiltonian, 6-31g basis
# n_orbitals 8
# theta 0.18
# alpha 1.00
IXZXXZXI 0.018705 -0.003404
IIIZIXZX 0.038191 -0.006950
ZIZIIIII 0.103932 -0.018913
XZXIXZXI 0.027826 -0.005063
IXXIIIXX -0.002794 0.000508
IIZZIIII 0.106657 -0.019408
IYIYIIII 0.024307 -0.004423
IIIIXXXX 0.015119 -0.002751
IZIIIIZI 0.095226 -0.017328
IIIIIIXX 0.047512 -0.039979
YYIIYZZY -0.019254 0.003504
XZXIYZYI 0.027826 -0.005063
IZIIYZYI 0.013080 -0.002380
IIYYIIXX 0.034554 -0.006288
XZXIIIZI 0.032587 -0.005930
YYYYIIII 0.015119 -0.002751
XXIIIYYI 0.005216 -0.000949
IXIXIIII 0.024307 -0.004423
IIIIXXYY 0.002918 -0.000531
IIIZXZXI 0.050249 -0.009144
IIXXXXII 0.020481 -0.003727
YYIIYYII 0.019597 -0.003566
IXXIIXXI 0.008283 -0.001507
IIIIXIXI 0.016733 -0.003045
IYZYIIII -0.035671 0.030324
IYZYIIIZ 0.043018 -0.007828
YYIIIYYI 0.005216 -0.000949
IIIIXZZX -0.028316 0.033738
XXIIYYII 0.019597 -0.003566
IXXIIIYY -0.002794 0.000508
ZYZYIIII 0.015436 -0.002809
XXIIYZZY -0.019254 0.003504
IIIIIZZI 0.084620 -0.015398
YZYIIZII 0.011702 -0.002129
IIYYXZZX -0.031698 0.005768
IIIIIXXI -0.007550 0.006494
IXZXIZII 0.012371 -0.002251
IIIIYYYY 0.015119 -0.002751
IIIZYZYI 0.050249 -0.009144
ZIIIIIII -0.230405 0.108639
ZIIIIIIZ 0.159054 -0.028943
IXXIYZZY 0.006593 -0.001200
IIIIIYIY 0.023153 -0.004213
IIYYIXXI -0.000541 0.000098
YZZYIIII -0.027204 0.031862
IIIZIIZI 0.139579 -0.025399
YZZYXXII -0.016647 0.003029
IIXXIIII 0.047746 -0.040370
XIXIIIII 0.017118 -0.003115
YYIIXXII 0.019597 -0.003566
YZYIIYZY 0.017127 -0.003117
IIIIZZII 0.084496 -0.015376
YZZYXZZX 0.031161 -0.005670
IIZIIYZY 0.024717 -0.004498
XZZXIXXI 0.004990 -0.000908
IYYIIYYI 0.008283 -0.001507
IYZYIXZX 0.015728 -0.002862
XZZXXZZX 0.031161 -0.005670
IYZYIIZI 0.026040 -0.004739
IIZIIZII 0.093507 -0.017015
IZIIZIII 0.106161 -0.019318
XXIIIXXI 0.005216 -0.000949
IXZXIYZY 0.015728 -0.002862
ZIIIIXZX 0.030922 -0.005627
IIIIIIYY 0.047512 -0.039979
XXIIIIYY 0.021209 -0.003859
XXIIIIXX 0.021209 -0.003859
YYIIIIII 0.001646 -0.022572
ZIIIIIZI 0.130169 -0.023687
IIYYIIYY 0.034554 -0.006288
YZYIIIIZ 0.052229 -0.009504
YZYIIIII -0.021561 0.077956
IIXXXZZX -0.031698 0.005768
IIIIZYZY 0.013729 -0.002498
IYYIXXII 0.003919 -0.000713
IIZIZIII 0.133407 -0.024276
YZZYYZZY 0.031161 -0.005670
XZXIZIII 0.040337 -0.007340
ZIIIZIII 0.151365 -0.027544
YZYIIXZX 0.017127 -0.003117
IIIIYIYI 0.016733 -0.003045
IIXXIYYI -0.000541 0.000098
IIYYYZZY -0.031698 0.005768
IYYIIIII -0.009705 0.008779
YZZYYYII -0.016647 0.003029
XZXIIXZX 0.017127 -0.003117
IIIIIXIX 0.023153 -0.004213
IIZIYZYI 0.033580 -0.006110
ZXZXIIII 0.015436 -0.002809
YZYZIIII 0.020644 -0.003757
IIIIYZZY -0.028316 0.033738
IXZXZIII 0.034152 -0.006215
YZZYIYYI 0.004990 -0.000908
ZIIZIIII 0.126456 -0.023011
YZZYIIXX -0.029557 0.005379
XZZXYZZY 0.031161 -0.005670
IYYIIIYY -0.002794 0.000508
IXZXIIII -0.035671 0.030324
IXZXIIIZ 0.043018 -0.007828
ZIIIYZYI 0.038659 -0.007035
IIXXIIXX 0.034554 -0.006288
ZZIIIIII 0.085046 -0.015476
IIIZZIII 0.158431 -0.028830
YXXYIIII 0.012162 -0.002213
IZIIIYZY 0.013159 -0.002395
IYZYXZXI 0.018705 -0.003404
XXIIXXII 0.019597 -0.003566
IIIIYXXY 0.012201 -0.002220
IIIIZIII -0.231557 0.112195
IIIIZIIZ 0.128680 -0.023416
YZYIXZXI 0.027826 -0.005063
IIYYYYII 0.020481 -0.003727
IIIIXZXZ 0.020604 -0.003749
IIIIXZXI -0.030067 0.081498
IIYYIYYI -0.000541 0.000098
IYYIYZZY 0.006593 -0.001200
YZYIYZYI 0.027826 -0.005063
IIZIXZXI 0.033580 -0.006110
IIXXYZZY -0.031698 0.005768
IIIIIIZI -0.611815 0.267480
IIIIIIZZ 0.107859 -0.019627
YZZYIXXI 0.004990 -0.000908
IIIIIXZX -0.012982 0.018373
IXXIXXII 0.003919 -0.000713
IIZIIIII -0.612966 0.271036
XZXIIYZY 0.017127 -0.003117
IIXXIXXI -0.000541 0.000098
IIIIYYII 0.000598 -0.021276
YYIIIIXX 0.021209 -0.003859
XZZXYYII -0.016647 0.003029
XZXZIIII 0.020644 -0.003757
YZZYIIYY -0.029557 0.005379
YYXXIIII 0.002957 -0.000538
YZYIIIZI 0.032587 -0.005930
IIXXYYII 0.020481 -0.003727
IXZXIXZX 0.015728 -0.002862
IXZXIIZI 0.026040 -0.004739
XYYXIIII 0.012162 -0.002213
ZIIIXZXI 0.038659 -0.007035
IIXXIIYY 0.034554 -0.006288
YYIIIIYY 0.021209 -0.003859
IZZIIIII 0.087497 -0.015922
IZIIIZII 0.094105 -0.017124
IIYYXXII 0.020481 -0.003727
IIIZIYZY 0.038191 -0.006950
IYYIIIXX -0.002794 0.000508
IXXIXZZX 0.006593 -0.001200
IIIIZXZX 0.013729 -0.002498
IIIIIYYI -0.007550 0.006494
IIIIZIZI 0.103932 -0.018913
YYIIXZZX -0.019254 0.003504
IXXIIIII -0.009705 0.008779
IIIIXXII 0.000598 -0.021276
XZZXIYYI 0.004990 -0.000908
IZIIIIIZ 0.110454 -0.020099
IZIIIIII -0.388873 0.102313
IYZYIZII 0.012371 -0.002251
IXXIIYYI 0.008283 -0.001507
IYYIYYII 0.003919 -0.000713
YYIIIXXI 0.005216 -0.000949
XXYYIIII 0.002957 -0.000538
IXXIYYII 0.003919 -0.000713
IIIIYZYZ 0.020604 -0.003749
IIIIYZYI -0.030067 0.081498
IYZYIYZY 0.015728 -0.002862
IZIIXZXI 0.013080 -0.002380
IIIIIIII 1.734311 -1.110499
IIIIIIIZ -0.896247 0.369556
IIZIIXZX 0.024717 -0.004498
IZIIIXZX 0.013159 -0.002395
IIZIIIZI 0.120598 -0.021945
XZZXIIYY -0.029557 0.005379
IIIIXYYX 0.012201 -0.002220
IYZYZIII 0.034152 -0.006215
IIYYIIII 0.047746 -0.040370
IXZXYZYI 0.018705 -0.003404
XZXIIIIZ 0.052229 -0.009504
XZXIIIII -0.021561 0.077956
XZZXXXII -0.016647 0.003029
ZIIIIYZY 0.030922 -0.005627
YIYIIIII 0.017118 -0.003115
IYYIXZZX 0.006593 -0.001200
XZZXIIII -0.027204 0.031862
IIIIIYZY -0.012982 0.018373
XXIIXZZX -0.019254 0.003504
XZXIIZII 0.011702 -0.002129
ZIIIIZII 0.102700 -0.018688
IIIIIZIZ 0.092214 -0.016780
IIIIIZII -0.386698 0.100135
IYYIIXXI 0.008283 -0.001507
IIIZIZII 0.105681 -0.019231
XXIIIIII 0.001646 -0.022572
IIIIYYXX 0.002918 -0.000531
IZIZIIII 0.092214 -0.016780
YZYIZIII 0.040337 -0.007340
XXXXIIII 0.015119 -0.002751
XZZXIIXX -0.029557 0.005379
IIIZIIIZ 0.184425 -0.033560
IIIZIIII -0.894071 0.367379
IIZIIIIZ 0.144136 -0.026228
IYZYYZYI 0.018705 -0.003404
)fix";

inline constexpr std::uint64_t kModelN5Digest = 0x2bc7ddc0661a5bb4ull;
inline constexpr std::uint64_t kH2MinusDigest = 0xe38b454c94650388ull;

/// 5-qubit model-system Hamiltonian at theta = 0.16, alpha = 0.65 (26 terms).
inline const PauliSum& fixture_model_n5() {
  static const PauliSum sum = parse_hamiltonian(kModelN5Text).sum;
  return sum;
}

/// 8-qubit H2- Hamiltonian at theta = 0.18, alpha = 1.00 (201 terms).
inline const PauliSum& fixture_h2minus() {
  static const PauliSum sum = parse_hamiltonian(kH2MinusText).sum;
  return sum;
}

}  // namespace qres
