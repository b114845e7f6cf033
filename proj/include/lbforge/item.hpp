// Copyright 2026 The lbforge Authors
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

#ifndef LBFORGE_ITEM_HPP
#define LBFORGE_ITEM_HPP

#include "lbforge/numerics.hpp"

namespace lbforge {

// An arrival. Ids are consecutive from 0 in arrival order.
struct Item {
  int id = 0;
  EpsRational size;

  friend bool operator==(const Item&, const Item&) = default;
};

}  // namespace lbforge

#endif  // LBFORGE_ITEM_HPP
