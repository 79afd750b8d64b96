// Generated by scripts/record_fixtures.py. Do not edit by hand.
//
// Every value is a verbatim response from the practice service; the
// tests replay them through a fake fetch that rejects any request
// whose key is not recorded here.

export const RUNNING_EXAMPLE = "sum ([3,7] ++ [5])";

export const OUTERMOST_STATES: string[] = [
  "sum ([3,7] ++ [5])",
  "foldl (+) 0 ([3,7] ++ [5])",
  "foldl (+) 0 (3 : ([7] ++ [5]))",
  "foldl (+) (0 + 3) ([7] ++ [5])",
  "foldl (+) (0 + 3) (7 : ([] ++ [5]))",
  "foldl (+) ((0 + 3) + 7) ([] ++ [5])",
  "foldl (+) ((0 + 3) + 7) [5]",
  "foldl (+) (((0 + 3) + 7) + 5) []",
  "((0 + 3) + 7) + 5",
  "(3 + 7) + 5",
  "10 + 5",
  "15"
];

export const WRONG_STEP = {
  atIndex: 1,
  submitted: "foldl (+) 1 ([3,7] ++ [5])",
};

export const OFF_STRATEGY_STEP = {
  atIndex: 2,
  submitted: "foldl (+) 3 ([7] ++ [5])",
};

export const PARSE_ERROR_SUBMITTED = "sum ((";

export const RECORDED: Record<string, unknown> = {
  "examples|||": {
    "ok": true,
    "service": "examples",
    "payload": {
      "examples": [
        "sum ([3,7] ++ [5])",
        "double (1 + 2)",
        "sum [1,2,3,4]",
        "sum' [1,2]",
        "sum'' [1,2]",
        "foldl (+) 0 [3,7,5]",
        "(id id) 3"
      ]
    }
  },
  "diagnose|outermost|sum ([3,7] ++ [5])|foldl (+) 0 ([3,7] ++ [5])": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.sum.rule",
      "message": "Calculate the sum of a list of numbers",
      "stepsRemaining": 10,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) 0 ([3,7] ++ [5])|foldl (+) 0 (3 : ([7] ++ [5]))": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.append.rule",
      "message": "Append two lists",
      "stepsRemaining": 9,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) 0 (3 : ([7] ++ [5]))|foldl (+) (0 + 3) ([7] ++ [5])": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.foldl.rule",
      "message": "Process a list using an operator that associates to the left",
      "stepsRemaining": 8,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) (0 + 3) ([7] ++ [5])|foldl (+) (0 + 3) (7 : ([] ++ [5]))": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.append.rule",
      "message": "Append two lists",
      "stepsRemaining": 7,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) (0 + 3) (7 : ([] ++ [5]))|foldl (+) ((0 + 3) + 7) ([] ++ [5])": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.foldl.rule",
      "message": "Process a list using an operator that associates to the left",
      "stepsRemaining": 6,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) ((0 + 3) + 7) ([] ++ [5])|foldl (+) ((0 + 3) + 7) [5]": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.append.rule",
      "message": "Append two lists",
      "stepsRemaining": 5,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) ((0 + 3) + 7) [5]|foldl (+) (((0 + 3) + 7) + 5) []": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.foldl.rule",
      "message": "Process a list using an operator that associates to the left",
      "stepsRemaining": 4,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) (((0 + 3) + 7) + 5) []|((0 + 3) + 7) + 5": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.foldl.rule",
      "message": "Process a list using an operator that associates to the left",
      "stepsRemaining": 3,
      "expected": []
    }
  },
  "diagnose|outermost|((0 + 3) + 7) + 5|(3 + 7) + 5": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.add.rule",
      "message": "Add two integers",
      "stepsRemaining": 2,
      "expected": []
    }
  },
  "diagnose|outermost|(3 + 7) + 5|10 + 5": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.add.rule",
      "message": "Add two integers",
      "stepsRemaining": 1,
      "expected": []
    }
  },
  "diagnose|outermost|10 + 5|15": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "CorrectStep",
      "ruleId": "eval.add.rule",
      "message": "Add two integers",
      "stepsRemaining": 0,
      "expected": []
    }
  },
  "diagnose|outermost|foldl (+) 0 ([3,7] ++ [5])|foldl (+) 1 ([3,7] ++ [5])": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "Incorrect",
      "ruleId": null,
      "message": "",
      "stepsRemaining": null,
      "expected": [
        "foldl (+) 0 (3 : ([7] ++ [5]))"
      ]
    }
  },
  "diagnose|outermost|foldl (+) 0 (3 : ([7] ++ [5]))|foldl (+) 3 ([7] ++ [5])": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "EquivalentButOffStrategy",
      "ruleId": null,
      "message": "",
      "stepsRemaining": 7,
      "expected": [
        "foldl (+) (0 + 3) ([7] ++ [5])"
      ]
    }
  },
  "diagnose|outermost|sum ([3,7] ++ [5])|sum ((": {
    "ok": true,
    "service": "diagnose",
    "payload": {
      "kind": "ParseError",
      "ruleId": null,
      "message": "unexpected end of input at position 6",
      "stepsRemaining": null,
      "expected": []
    }
  },
  "onefirst|outermost|sum ([3,7] ++ [5])|": {
    "ok": true,
    "service": "onefirst",
    "payload": {
      "hint": {
        "ruleId": "eval.sum.rule",
        "message": "Calculate the sum of a list of numbers",
        "focus": [
          0
        ],
        "result": "foldl (+) 0 ([3,7] ++ [5])"
      }
    }
  },
  "stepsremaining|outermost|sum ([3,7] ++ [5])|": {
    "ok": true,
    "service": "stepsremaining",
    "payload": {
      "stepsRemaining": 11
    }
  },
  "onefirst|outermost|15|": {
    "ok": true,
    "service": "onefirst",
    "payload": {
      "hint": null
    }
  },
  "stepsremaining|outermost|15|": {
    "ok": true,
    "service": "stepsremaining",
    "payload": {
      "stepsRemaining": 0
    }
  }
};
