// Copyright 2026 The dmkp Authors
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

#ifndef DMKP_SRC_INT128_H_
#define DMKP_SRC_INT128_H_

namespace dmkp {

// Wide intermediate for products of two int64 values.
__extension__ typedef __int128 Int128;

}  // namespace dmkp

#endif  // DMKP_SRC_INT128_H_
