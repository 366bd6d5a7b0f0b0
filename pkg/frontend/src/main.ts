import { ApiClient } from "./api.js";
import { DraftPersistence } from "./persist.js";
import { ComposerStore } from "./store.js";
import { mountComposer } from "./ui.js";

const api = new ApiClient("");
const store = new ComposerStore(api, new DraftPersistence(window.localStorage));

const root = document.getElementById("composer");
if (!root) throw new Error("missing #composer mount point");

mountComposer(root, store);
void store.init();
