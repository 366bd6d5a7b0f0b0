/** Recorded wire responses from the service for the schema-figure catalogue. */

import { CatalogueInfo, PhraseDetail, PhraseSummary } from "../src/types.js";

export const CATALOGUE: CatalogueInfo = {
  "version": 1,
  "source": "de",
  "languages": [
    "de",
    "fr",
    "it",
    "en"
  ]
};

export const PHRASE_LIST: PhraseSummary[] = [
  {
    "id": "P-AVAL",
    "label": "avalanches can reach ...",
    "segments": 5
  }
];

export const PHRASE_DETAIL: PhraseDetail = {
  "catalogueVersion": 1,
  "phrase": {
    "id": "P-AVAL",
    "label": "avalanches can reach ...",
    "segments": [
      {
        "id": "s1",
        "label": "subject",
        "uniformAgreement": true,
        "options": [
          {
            "id": "o1",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "die Lawinen"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "les avalanches"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "le valanghe"
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "the avalanches"
                }
              ]
            },
            "agreement": {
              "de": {
                "gender": "f",
                "number": "pl"
              },
              "fr": {
                "gender": "f",
                "number": "pl"
              },
              "it": {
                "gender": "f",
                "number": "pl"
              }
            }
          },
          {
            "id": "o2",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "nasse Lawinen"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "les avalanches mouillées"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "le valanghe bagnate"
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "wet avalanches"
                }
              ]
            },
            "agreement": {
              "de": {
                "gender": "f",
                "number": "pl"
              },
              "fr": {
                "gender": "f",
                "number": "pl"
              },
              "it": {
                "gender": "f",
                "number": "pl"
              }
            }
          },
          {
            "id": "o3",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "diese"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "ces dernières"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "queste ultime"
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "they"
                }
              ]
            },
            "antecedentHint": "die Lawinen",
            "agreement": {
              "de": {
                "gender": "f",
                "number": "pl"
              },
              "fr": {
                "gender": "f",
                "number": "pl"
              },
              "it": {
                "gender": "f",
                "number": "pl"
              }
            }
          }
        ]
      },
      {
        "id": "s2",
        "label": "modal",
        "uniformAgreement": false,
        "options": [
          {
            "id": "o1",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "können"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "peuvent"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "possono"
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "can"
                }
              ]
            }
          }
        ]
      },
      {
        "id": "s3",
        "label": "where",
        "uniformAgreement": false,
        "options": [
          {
            "id": "o1",
            "contents": {
              "de": [],
              "fr": [],
              "it": [],
              "en": {
                "a": [],
                "b": []
              }
            }
          },
          {
            "id": "o2",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "auch"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "aussi"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "anche"
                }
              ],
              "en": {
                "a": [],
                "b": [
                  {
                    "t": "lit",
                    "v": "also"
                  }
                ]
              }
            }
          },
          {
            "id": "o3",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "an"
                },
                {
                  "t": "slot",
                  "v": "on_steep"
                },
                {
                  "t": "lit",
                  "v": "Sonnenhängen"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "sur les pentes ensoleillées"
                },
                {
                  "t": "slot",
                  "v": "on_steep"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "sui pendii soleggiati"
                },
                {
                  "t": "slot",
                  "v": "on_steep"
                }
              ],
              "en": {
                "a": [
                  {
                    "t": "slot",
                    "v": "on_steep"
                  },
                  {
                    "t": "lit",
                    "v": "sunny slopes"
                  }
                ],
                "b": []
              }
            }
          },
          {
            "id": "o4",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "in diesen Gebieten"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "dans ces régions"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "in queste regioni"
                }
              ],
              "en": {
                "a": [
                  {
                    "t": "lit",
                    "v": "in these regions"
                  }
                ],
                "b": []
              }
            }
          }
        ]
      },
      {
        "id": "s4",
        "label": "when",
        "uniformAgreement": false,
        "options": [
          {
            "id": "o1",
            "contents": {
              "de": [],
              "fr": [],
              "it": [],
              "en": []
            }
          },
          {
            "id": "o2",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "oft"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "souvent"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "spesso"
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "in many cases"
                }
              ]
            }
          },
          {
            "id": "o3",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "weiterhin"
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "encore"
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "ancora"
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "as before"
                }
              ]
            }
          }
        ]
      },
      {
        "id": "s5",
        "label": "outcome",
        "uniformAgreement": false,
        "options": [
          {
            "id": "o1",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "gross werden."
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "devenir grandes."
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "diventare di grandi dimensioni."
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "reach large size."
                }
              ]
            }
          },
          {
            "id": "o2",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "weit vorstossen."
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "avancer loin."
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "avanzare lontano."
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "reach a long way."
                }
              ]
            }
          },
          {
            "id": "o3",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "bis in die aperen Täler vorstossen."
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "avancer jusque dans les vallées déneigées."
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "avanzare fino alle valli senza neve."
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "reach the bare valleys."
                }
              ]
            }
          },
          {
            "id": "o4",
            "contents": {
              "de": [
                {
                  "t": "lit",
                  "v": "bis in tiefe Lagen vorstossen."
                }
              ],
              "fr": [
                {
                  "t": "lit",
                  "v": "avancer jusqu'à basse altitude."
                }
              ],
              "it": [
                {
                  "t": "lit",
                  "v": "avanzare fino a bassa quota."
                }
              ],
              "en": [
                {
                  "t": "lit",
                  "v": "reach low altitudes."
                }
              ]
            }
          }
        ]
      }
    ],
    "layouts": {
      "de": [
        "1",
        "2",
        "3",
        "4",
        "5"
      ],
      "fr": [
        "1",
        "2",
        "3",
        "4",
        "5"
      ],
      "it": [
        "1",
        "2",
        "3",
        "4",
        "5"
      ],
      "en": [
        "3a",
        "1",
        "2",
        "3b",
        "4",
        "5"
      ]
    }
  },
  "subSegments": {
    "on_steep": {
      "label": "steepness",
      "options": [
        {
          "id": "very_steep",
          "contents": {
            "de": [
              {
                "t": "lit",
                "v": "sehr steilen"
              }
            ],
            "fr": [
              {
                "t": "lit",
                "v": "très raides"
              }
            ],
            "it": [
              {
                "t": "lit",
                "v": "molto ripidi"
              }
            ],
            "en": [
              {
                "t": "lit",
                "v": "on very steep"
              }
            ]
          }
        },
        {
          "id": "steep",
          "contents": {
            "de": [
              {
                "t": "lit",
                "v": "steilen"
              }
            ],
            "fr": [
              {
                "t": "lit",
                "v": "raides"
              }
            ],
            "it": [
              {
                "t": "lit",
                "v": "ripidi"
              }
            ],
            "en": [
              {
                "t": "lit",
                "v": "on steep"
              }
            ]
          }
        }
      ]
    }
  }
};
