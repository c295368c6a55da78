// Copyright 2026 The Credible Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CREDIBLE_REFERENCE_GAMES_H_
#define CREDIBLE_REFERENCE_GAMES_H_

#include "credible/automaton.h"
#include "credible/behavior.h"
#include "credible/game.h"
#include "credible/perfect_info.h"

namespace credible::reference {

// 3x3 symmetric coordination game with actions C, D, E:
// (C,C)=4,4  (C,E)=0,5  (E,C)=5,0  (D,D)=1,1  (E,E)=3,3, zero elsewhere.
StageGame CdeGame();

// Prisoners' dilemma with actions C, D: (C,C)=3,3 (C,D)=0,5 (D,C)=5,0
// (D,D)=1,1.
StageGame PrisonersDilemma();

StageGame MatchingPennies();

// Rows U, M, D; columns L, R, S where S duplicates R. Support enumeration
// meets a singular system and finds only (M,L), which iterated dominance
// cannot confirm.
StageGame DuplicateColumnGame();

// Two-stage game with actions A, B where (B,B) in the first stage is not a
// stage equilibrium but is supported by a costless second-stage threat.
StageGame ThreatStageOne();
StageGame ThreatStageTwo();

MultiStageGame Repeated(const StageGame& g, int times, Rat delta);
MultiStageGame RepeatedForever(const StageGame& g, Rat delta);
MultiStageGame ThreatGame();

// (C,C) first; (E,E) after (C,C), (D,D) after anything else.
BehaviorProfile CooperationWithPunishment(const MultiStageGame& twice_cde);
// Row: B, then B after (B,B) and A otherwise. Column: always B.
BehaviorProfile ThreatProfile(const MultiStageGame& threat_game);

// Root P0 move to one of two copies of: P1 chooses x or y; after x, P0
// chooses p -> (1,0) or q -> (1,5); y -> (0,2).
GameTree TiedCopiesTree();
// Root P0 chooses Take -> (1,0) or Pass; then P1 chooses a -> (0,2) or
// b -> (3,1).
GameTree TakeOrPassTree();

}  // namespace credible::reference

#endif  // CREDIBLE_REFERENCE_GAMES_H_
